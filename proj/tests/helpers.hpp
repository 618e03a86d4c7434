#pragma once

// Test-only utilities: an independent rule-by-rule Othello oracle that works
// square by square (no bitboard tricks), board symmetries, and seeded random
// playouts. The oracle deliberately shares no code with the library's move
// generator so the two act as independent routes.

#include <cstdint>
#include <vector>

#include "gts/othello.hpp"
#include "gts/rng.hpp"

namespace oracle {

inline int at(const gts::OthelloBoard& b, int r, int c) {
    const int sq = r * 8 + c;
    if (b.black >> sq & 1) return 1;
    if (b.white >> sq & 1) return 2;
    return 0;
}

inline int side_code(const gts::OthelloBoard& b) {
    return b.side_to_move == gts::Color::Black ? 1 : 2;
}

// All squares flipped by `mover` playing (r, c), by scanning the 8 rays.
inline std::vector<int> flips(const gts::OthelloBoard& b, int mover, int r, int c) {
    std::vector<int> result;
    if (at(b, r, c) != 0) return result;
    const int other = 3 - mover;
    static constexpr int dr[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
    static constexpr int dc[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    for (int dir = 0; dir < 8; ++dir) {
        std::vector<int> run;
        int rr = r + dr[dir], cc = c + dc[dir];
        while (rr >= 0 && rr < 8 && cc >= 0 && cc < 8 && at(b, rr, cc) == other) {
            run.push_back(rr * 8 + cc);
            rr += dr[dir];
            cc += dc[dir];
        }
        if (!run.empty() && rr >= 0 && rr < 8 && cc >= 0 && cc < 8 && at(b, rr, cc) == mover)
            result.insert(result.end(), run.begin(), run.end());
    }
    return result;
}

inline std::vector<int> flip_squares_for(const gts::OthelloBoard& b, int mover) {
    std::vector<int> result;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (!flips(b, mover, r, c).empty()) result.push_back(r * 8 + c);
    return result;
}

inline std::vector<gts::Move> legal_moves(const gts::OthelloBoard& b) {
    const auto own = flip_squares_for(b, side_code(b));
    std::vector<gts::Move> moves;
    if (own.empty()) {
        if (!flip_squares_for(b, 3 - side_code(b)).empty()) moves.push_back(gts::Move::pass());
        return moves;
    }
    for (int sq : own) moves.push_back(gts::Move::at(sq));
    return moves;
}

inline gts::OthelloBoard apply_move(const gts::OthelloBoard& b, gts::Move m) {
    gts::OthelloBoard next = b;
    next.side_to_move = gts::opponent(b.side_to_move);
    if (m.is_pass()) return next;
    const int mover = side_code(b);
    const auto f = flips(b, mover, m.square / 8, m.square % 8);
    std::uint64_t mask = 1ULL << m.square;
    for (int sq : f) mask |= 1ULL << sq;
    if (mover == 1) {
        next.black = b.black | mask;
        next.white = b.white & ~mask;
    } else {
        next.white = b.white | mask;
        next.black = b.black & ~mask;
    }
    return next;
}

} // namespace oracle

namespace testutil {

// The 8 board symmetries as square permutations.
inline int transform_square(int sq, int which) {
    int r = sq / 8, c = sq % 8;
    if (which & 4) std::swap(r, c);       // transpose
    if (which & 1) c = 7 - c;             // mirror files
    if (which & 2) r = 7 - r;             // mirror ranks
    return r * 8 + c;
}

inline std::uint64_t transform_mask(std::uint64_t m, int which) {
    std::uint64_t out = 0;
    for (int sq = 0; sq < 64; ++sq)
        if (m >> sq & 1) out |= 1ULL << transform_square(sq, which);
    return out;
}

inline gts::OthelloBoard transform_board(const gts::OthelloBoard& b, int which) {
    gts::OthelloBoard out = b;
    out.black = transform_mask(b.black, which);
    out.white = transform_mask(b.white, which);
    return out;
}

inline gts::OthelloBoard swap_colors(const gts::OthelloBoard& b) {
    gts::OthelloBoard out;
    out.black = b.white;
    out.white = b.black;
    out.side_to_move = gts::opponent(b.side_to_move);
    return out;
}

// Seeded random playout of `plies` moves (stops early at game end).
inline gts::OthelloBoard random_playout(std::uint64_t seed, int plies) {
    gts::SplitMix64 rng(seed);
    gts::OthelloBoard b = gts::initial_board();
    for (int i = 0; i < plies; ++i) {
        const auto moves = gts::legal_moves(b);
        if (moves.empty()) break;
        b = gts::apply_move(b, moves[rng.below(moves.size())]);
    }
    return b;
}

} // namespace testutil
