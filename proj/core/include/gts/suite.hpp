#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gts/othello.hpp"

namespace gts {

// An ordered list of benchmark positions, each reachable from the initial
// board with at least one non-pass move for the side to move.
struct Suite {
    struct Entry {
        int id = 0;
        OthelloBoard board;
    };
    std::vector<Entry> positions;
};

// Seeded uniform-random legal playouts from the initial board to a ply drawn
// uniformly from [min_ply, max_ply]. Playouts that end early or leave the
// mover without a flipping move are re-rolled. Deterministic in the seed.
// pre: 0 <= min_ply <= max_ply <= 58.
Suite gen_suite(std::uint64_t seed, int count, int min_ply, int max_ply);

// One position per line in the game text format; no comments are written, so
// a count-N suite is exactly N lines.
void save_suite(std::ostream& os, const Suite& suite);

// Reads one position per line; '#'-prefixed comment lines and blank lines are
// skipped. Ids are assigned in reading order from 0.
Suite load_suite(std::istream& is);

} // namespace gts
