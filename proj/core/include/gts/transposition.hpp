#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gts/types.hpp"

namespace gts {

// One slot per position: two-sided value bounds so repeated null-window passes
// keep everything they learn, plus the best move for ordering.
struct TTEntry {
    std::uint64_t key = 0;
    Score lower = -kInf;
    Score upper = kInf;
    std::int32_t depth = -1;     // plies remaining below the node when stored
    std::int32_t move_code = -1; // game-specific action code, -1 = none
    std::uint32_t epoch = 0;     // 0 = empty slot
};

struct TTProbe {
    bool has_bounds = false; // stored depth >= requested depth
    Score lower = -kInf;
    Score upper = kInf;
    std::int32_t move_code = -1;
};

// Fixed-capacity, single-level table. slot(key) = key mod capacity; a hit
// requires full-key equality. Replacement: empty slot, stale epoch, or
// depth-preferred; re-storing the same key and depth intersects the bounds.
class TranspositionTable {
public:
    explicit TranspositionTable(std::size_t capacity = std::size_t{1} << 20);

    // nullopt = no full-key match. On a match the best move is always
    // returned; bounds only when the stored depth covers the request.
    std::optional<TTProbe> probe(std::uint64_t key, int depth);

    // pre: lower <= upper (throws std::invalid_argument otherwise).
    void store(std::uint64_t key, int depth, Score lower, Score upper, std::int32_t move_code);

    // Marks existing entries stale (replaceable) and zeroes the counters for
    // the next search. Entries stay probeable until overwritten.
    void new_epoch();

    std::size_t capacity() const { return entries_.size(); }
    std::uint32_t epoch() const { return epoch_; }
    std::uint64_t probes() const { return probes_; }
    std::uint64_t hits() const { return hits_; }
    std::uint64_t stores() const { return stores_; }

    // Full-key lookup without touching the counters (nullptr on miss).
    const TTEntry* find(std::uint64_t key) const {
        const TTEntry& e = entries_[key & mask_];
        return (e.epoch != 0 && e.key == key) ? &e : nullptr;
    }

    // Slot inspection, used by table scans in tests.
    const TTEntry& slot_at(std::size_t i) const { return entries_[i]; }

private:
    std::vector<TTEntry> entries_;
    std::uint64_t mask_;
    std::uint32_t epoch_ = 1;
    std::uint64_t probes_ = 0;
    std::uint64_t hits_ = 0;
    std::uint64_t stores_ = 0;
};

} // namespace gts
