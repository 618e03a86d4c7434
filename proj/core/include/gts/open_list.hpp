#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>

#include "gts/dewey.hpp"
#include "gts/types.hpp"

namespace gts {

enum class SssStatus : std::uint8_t { Live, Solved };

inline const char* to_string(SssStatus s) { return s == SssStatus::Live ? "LIVE" : "SOLVED"; }

// <name, live/solved, bound> plus what re-expansion needs: the node's player
// and its state snapshot.
template <typename StateT>
struct SssState {
    DeweyPath path;
    SssStatus status = SssStatus::Live;
    Score merit = kInf;
    Player node_player = Player::Max;
    StateT board{};
};

// The OPEN structure: a max-priority queue over SssState. Highest merit pops
// first; equal merits go to the lexicographically smallest path (leftmost in
// the tree). Paths are unique, and purging removes the proper descendants of
// a prefix.
template <typename StateT>
class OpenList {
public:
    void push(SssState<StateT> s) {
        if (!paths_.insert(s.path).second)
            throw std::logic_error("open_list: duplicate path pushed: " + s.path.to_string());
        entries_.insert(std::move(s));
        if (entries_.size() > peak_) peak_ = entries_.size();
    }

    SssState<StateT> pop_max() {
        if (entries_.empty()) throw std::logic_error("open_list: pop from an empty list");
        auto node = entries_.extract(entries_.begin());
        SssState<StateT> s = std::move(node.value());
        paths_.erase(s.path);
        return s;
    }

    // Removes every state whose path has `prefix` as a proper prefix; the
    // state at exactly `prefix` stays. Returns the number removed.
    std::size_t purge_descendants(const DeweyPath& prefix) {
        std::size_t removed = 0;
        for (auto it = entries_.begin(); it != entries_.end();) {
            if (prefix.is_proper_prefix_of(it->path)) {
                paths_.erase(it->path);
                it = entries_.erase(it);
                ++removed;
            } else {
                ++it;
            }
        }
        return removed;
    }

    bool contains(const DeweyPath& p) const { return paths_.count(p) != 0; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::size_t peak() const { return peak_; }

private:
    struct ByMeritThenPath {
        bool operator()(const SssState<StateT>& a, const SssState<StateT>& b) const {
            if (a.merit != b.merit) return a.merit > b.merit;
            return a.path < b.path;
        }
    };

    std::set<SssState<StateT>, ByMeritThenPath> entries_;
    std::set<DeweyPath> paths_;
    std::size_t peak_ = 0;
};

} // namespace gts
