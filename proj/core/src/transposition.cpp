#include "gts/transposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gts {

TranspositionTable::TranspositionTable(std::size_t capacity) {
    if (capacity == 0 || !std::has_single_bit(capacity))
        throw std::invalid_argument("transposition table capacity must be a power of two");
    entries_.resize(capacity);
    mask_ = capacity - 1;
}

std::optional<TTProbe> TranspositionTable::probe(std::uint64_t key, int depth) {
    ++probes_;
    const TTEntry& e = entries_[key & mask_];
    if (e.epoch == 0 || e.key != key) return std::nullopt;
    ++hits_;
    TTProbe p;
    p.move_code = e.move_code;
    if (e.depth >= depth) {
        p.has_bounds = true;
        p.lower = e.lower;
        p.upper = e.upper;
    }
    return p;
}

void TranspositionTable::store(std::uint64_t key, int depth, Score lower, Score upper,
                               std::int32_t move_code) {
    if (lower > upper) throw std::invalid_argument("tt store: lower bound above upper bound");
    ++stores_;
    TTEntry& e = entries_[key & mask_];
    if (e.epoch != 0 && e.key == key && e.depth == depth) {
        // Same position, same depth: both bound pairs hold, keep the tighter.
        e.lower = std::max(e.lower, lower);
        e.upper = std::min(e.upper, upper);
        if (e.lower > e.upper)
            throw std::logic_error("tt store: intersected bounds crossed (engine bug)");
        if (move_code >= 0) e.move_code = move_code;
        e.epoch = epoch_;
        return;
    }
    if (e.epoch == 0 || e.epoch < epoch_ || depth >= e.depth)
        e = TTEntry{key, lower, upper, depth, move_code, epoch_};
}

void TranspositionTable::new_epoch() {
    ++epoch_;
    probes_ = hits_ = stores_ = 0;
}

} // namespace gts
