#include "gts/suite.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gts/rng.hpp"

namespace gts {

Suite gen_suite(std::uint64_t seed, int count, int min_ply, int max_ply) {
    if (count < 0) throw std::invalid_argument("gen_suite: count must be >= 0");
    if (min_ply < 0 || min_ply > max_ply || max_ply > 58)
        throw std::invalid_argument("gen_suite: need 0 <= min_ply <= max_ply <= 58");
    Suite suite;
    suite.positions.reserve(static_cast<std::size_t>(count));
    SplitMix64 rng(seed);
    const int span = max_ply - min_ply + 1;
    int attempts = 0;
    while (static_cast<int>(suite.positions.size()) < count) {
        if (++attempts > 10'000 * (count + 1))
            throw std::runtime_error("gen_suite: too many rejected playouts");
        const int target = min_ply + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
        OthelloBoard b = initial_board();
        bool dead = false;
        for (int ply = 0; ply < target; ++ply) {
            const std::vector<Move> moves = legal_moves(b);
            if (moves.empty()) {
                dead = true;
                break;
            }
            b = apply_move(b, moves[rng.below(moves.size())]);
        }
        if (dead) continue;
        const std::vector<Move> moves = legal_moves(b);
        if (moves.empty() || moves[0].is_pass()) continue; // mover must have a flipping move
        suite.positions.push_back({static_cast<int>(suite.positions.size()), b});
    }
    return suite;
}

void save_suite(std::ostream& os, const Suite& suite) {
    for (const Suite::Entry& e : suite.positions) os << format_position(e.board) << '\n';
}

Suite load_suite(std::istream& is) {
    Suite suite;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        suite.positions.push_back({static_cast<int>(suite.positions.size()), parse_position(line)});
    }
    return suite;
}

} // namespace gts
