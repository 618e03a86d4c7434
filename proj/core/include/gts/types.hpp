#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gts {

using Score = int;

// Strictly greater than any achievable value: heuristic scores stay within
// +-99'999 and terminal scores within +-64'000.
inline constexpr Score kInf = 1'000'000;

enum class Player : std::uint8_t { Max, Min };

constexpr Player opposite(Player p) { return p == Player::Max ? Player::Min : Player::Max; }

inline const char* to_string(Player p) { return p == Player::Max ? "MAX" : "MIN"; }

enum class Color : std::uint8_t { Black, White };

constexpr Color opponent(Color c) { return c == Color::Black ? Color::White : Color::Black; }

// One Othello move: a target square (rank*8 + file, a1 = 0) or a pass.
struct Move {
    static constexpr int kPass = -1;

    int square = kPass;

    static constexpr Move pass() { return Move{kPass}; }
    static constexpr Move at(int sq) { return Move{sq}; }
    constexpr bool is_pass() const { return square == kPass; }

    auto operator<=>(const Move&) const = default;
};

inline std::string square_name(int sq) {
    if (sq < 0 || sq > 63) throw std::invalid_argument("square_name: index out of range");
    std::string s;
    s += static_cast<char>('a' + sq % 8);
    s += static_cast<char>('1' + sq / 8);
    return s;
}

inline std::string to_string(Move m) { return m.is_pass() ? "pass" : square_name(m.square); }

// Errors that cross module boundaries.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineDisagreement : std::runtime_error {
    int position_id;
    int depth;
    EngineDisagreement(const std::string& msg, int pos, int d)
        : std::runtime_error(msg), position_id(pos), depth(d) {}
};

} // namespace gts
