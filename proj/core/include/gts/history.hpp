#pragma once

#include <array>
#include <cstdint>

#include "gts/types.hpp"

namespace gts {

// Cutoff counters per (side, square), bumped by depth^2 on a cutoff. Action
// codes outside 0..63 (pass, wide synthetic trees) are ignored.
class HistoryTable {
public:
    void bump(Player side, int code, int depth) {
        if (code < 0 || code >= 64) return;
        t_[index(side)][static_cast<std::size_t>(code)] +=
            static_cast<std::uint64_t>(depth) * static_cast<std::uint64_t>(depth);
    }

    std::uint64_t get(Player side, int code) const {
        if (code < 0 || code >= 64) return 0;
        return t_[index(side)][static_cast<std::size_t>(code)];
    }

private:
    static std::size_t index(Player p) { return p == Player::Max ? 0 : 1; }
    std::array<std::array<std::uint64_t, 64>, 2> t_{};
};

} // namespace gts
