#include "gts/othello.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "gts/rng.hpp"

namespace gts {

namespace {

constexpr std::uint64_t kNotFileA = 0xFEFEFEFEFEFEFEFEULL;
constexpr std::uint64_t kNotFileH = 0x7F7F7F7F7F7F7F7FULL;

// E, W, N, S, NE, NW, SE, SW
inline std::uint64_t shift_dir(std::uint64_t b, int dir) {
    switch (dir) {
        case 0: return (b << 1) & kNotFileA;
        case 1: return (b >> 1) & kNotFileH;
        case 2: return b << 8;
        case 3: return b >> 8;
        case 4: return (b << 9) & kNotFileA;
        case 5: return (b << 7) & kNotFileH;
        case 6: return (b >> 7) & kNotFileA;
        default: return (b >> 9) & kNotFileH;
    }
}

std::uint64_t flips_for(std::uint64_t own, std::uint64_t opp, int sq) {
    const std::uint64_t bit = 1ULL << sq;
    std::uint64_t flips = 0;
    for (int dir = 0; dir < 8; ++dir) {
        std::uint64_t run = 0;
        std::uint64_t cur = shift_dir(bit, dir);
        while (cur & opp) {
            run |= cur;
            cur = shift_dir(cur, dir);
        }
        if (cur & own) flips |= run;
    }
    return flips;
}

std::uint64_t move_mask(std::uint64_t own, std::uint64_t opp) {
    const std::uint64_t empty = ~(own | opp);
    std::uint64_t moves = 0;
    for (int dir = 0; dir < 8; ++dir) {
        std::uint64_t t = shift_dir(own, dir) & opp;
        for (int i = 0; i < 5; ++i) t |= shift_dir(t, dir) & opp;
        moves |= shift_dir(t, dir) & empty;
    }
    return moves;
}

constexpr std::uint64_t kCorners = (1ULL << 0) | (1ULL << 7) | (1ULL << 56) | (1ULL << 63);

// Seed for the zobrist code generator.
constexpr std::uint64_t kZobristSeed = 0x5EED07E110ULL;

struct ZobristCodes {
    std::array<std::array<std::uint64_t, 64>, 2> square;
    std::uint64_t white_to_move;

    ZobristCodes() {
        SplitMix64 rng(kZobristSeed);
        for (auto& side : square)
            for (auto& code : side) code = rng.next();
        white_to_move = rng.next();
    }
};

const ZobristCodes& zobrist_codes() {
    static const ZobristCodes codes;
    return codes;
}

} // namespace

OthelloBoard initial_board() {
    OthelloBoard b;
    b.white = (1ULL << 27) | (1ULL << 36);
    b.black = (1ULL << 28) | (1ULL << 35);
    b.side_to_move = Color::Black;
    return b;
}

std::uint64_t flip_move_mask(const OthelloBoard& b, Color side) {
    return move_mask(b.own(side), b.own(opponent(side)));
}

std::vector<Move> legal_moves(const OthelloBoard& b) {
    std::uint64_t mask = flip_move_mask(b, b.side_to_move);
    std::vector<Move> moves;
    if (mask == 0) {
        if (flip_move_mask(b, opponent(b.side_to_move)) != 0) moves.push_back(Move::pass());
        return moves;
    }
    while (mask) {
        const int sq = std::countr_zero(mask);
        moves.push_back(Move::at(sq));
        mask &= mask - 1;
    }
    return moves;
}

OthelloBoard apply_move(const OthelloBoard& b, Move m) {
    OthelloBoard next = b;
    next.side_to_move = opponent(b.side_to_move);
    if (m.is_pass()) {
        if (flip_move_mask(b, b.side_to_move) != 0)
            throw std::invalid_argument("apply_move: pass while a flipping move exists");
        return next;
    }
    if (m.square < 0 || m.square > 63)
        throw std::invalid_argument("apply_move: square out of range");
    const std::uint64_t bit = 1ULL << m.square;
    if (b.occupied() & bit) throw std::invalid_argument("apply_move: square occupied");
    const std::uint64_t own = b.own(b.side_to_move);
    const std::uint64_t opp = b.own(opponent(b.side_to_move));
    const std::uint64_t flips = flips_for(own, opp, m.square);
    if (flips == 0) throw std::invalid_argument("apply_move: move flips nothing");
    if (b.side_to_move == Color::Black) {
        next.black = own | bit | flips;
        next.white = opp ^ flips;
    } else {
        next.white = own | bit | flips;
        next.black = opp ^ flips;
    }
    return next;
}

bool is_terminal(const OthelloBoard& b) {
    return flip_move_mask(b, Color::Black) == 0 && flip_move_mask(b, Color::White) == 0;
}

Score evaluate(const OthelloBoard& b, Color perspective) {
    const std::uint64_t own = b.own(perspective);
    const std::uint64_t other = b.own(opponent(perspective));
    const int own_discs = std::popcount(own);
    const int opp_discs = std::popcount(other);
    if (is_terminal(b)) return (own_discs - opp_discs) * 1000;
    const int corner_diff = std::popcount(own & kCorners) - std::popcount(other & kCorners);
    const int mobility_diff = std::popcount(flip_move_mask(b, perspective)) -
                              std::popcount(flip_move_mask(b, opponent(perspective)));
    return 100 * corner_diff + 10 * mobility_diff + (own_discs - opp_discs);
}

std::uint64_t zobrist_key(const OthelloBoard& b) {
    const ZobristCodes& z = zobrist_codes();
    std::uint64_t key = 0;
    std::uint64_t m = b.black;
    while (m) {
        key ^= z.square[0][std::countr_zero(m)];
        m &= m - 1;
    }
    m = b.white;
    while (m) {
        key ^= z.square[1][std::countr_zero(m)];
        m &= m - 1;
    }
    if (b.side_to_move == Color::White) key ^= z.white_to_move;
    return key;
}

OthelloBoard parse_position(const std::string& text) {
    if (text.size() != 66) throw ParseError("position text must be 66 characters (64 squares, space, side)");
    if (text[64] != ' ') throw ParseError("position text missing space before side char");
    OthelloBoard b;
    b.black = b.white = 0;
    for (int i = 0; i < 64; ++i) {
        switch (text[i]) {
            case 'X': b.black |= 1ULL << i; break;
            case 'O': b.white |= 1ULL << i; break;
            case '-': break;
            default: throw ParseError(std::string("bad square char '") + text[i] + "' at offset " + std::to_string(i));
        }
    }
    switch (text[65]) {
        case 'X': b.side_to_move = Color::Black; break;
        case 'O': b.side_to_move = Color::White; break;
        default: throw ParseError("side char must be X or O");
    }
    return b;
}

std::string format_position(const OthelloBoard& b) {
    std::string s(66, '-');
    for (int i = 0; i < 64; ++i) {
        if (b.black >> i & 1) s[i] = 'X';
        else if (b.white >> i & 1) s[i] = 'O';
    }
    s[64] = ' ';
    s[65] = b.side_to_move == Color::Black ? 'X' : 'O';
    return s;
}

} // namespace gts
