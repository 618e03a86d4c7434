#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gts/types.hpp"

namespace gts {

// Two disjoint occupancy masks plus the side to move. Square i is rank*8 + file
// with a1 = 0, so bit 0 is a1 and bit 63 is h8.
struct OthelloBoard {
    std::uint64_t black = 0;
    std::uint64_t white = 0;
    Color side_to_move = Color::Black;

    std::uint64_t own(Color c) const { return c == Color::Black ? black : white; }
    std::uint64_t occupied() const { return black | white; }

    auto operator<=>(const OthelloBoard&) const = default;
};

// Standard start: white on d4/e5, black on d5/e4, Black to move.
OthelloBoard initial_board();

// Squares where `side` has a flipping move, as a bitmask.
std::uint64_t flip_move_mask(const OthelloBoard& b, Color side);

// Ascending square order. [PASS] iff the mover has no flipping move but the
// opponent does; [] iff neither side can move.
std::vector<Move> legal_moves(const OthelloBoard& b);

// Applies a legal move (all flanked lines flip, side toggles; PASS toggles the
// side only). Throws std::invalid_argument for an illegal move.
OthelloBoard apply_move(const OthelloBoard& b, Move m);

// True iff neither side has a flipping move.
bool is_terminal(const OthelloBoard& b);

// Game over: (own - opponent) discs * 1000. Otherwise 100*corner diff +
// 10*mobility diff + disc diff, all from `perspective`. Depends only on the
// masks, never on the side to move.
Score evaluate(const OthelloBoard& b, Color perspective);

// XOR of per-(square, color) codes plus a side-to-move code; a pure function
// of the position, so any move order reaching it produces the same key.
std::uint64_t zobrist_key(const OthelloBoard& b);

// Text form: 64 chars over {X, O, -} in row-major order (a1 first), one space,
// then X or O for the side to move. X is black.
OthelloBoard parse_position(const std::string& text);
std::string format_position(const OthelloBoard& b);

} // namespace gts
