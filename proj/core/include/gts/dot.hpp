#pragma once

#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "gts/game.hpp"

namespace gts {

// Emits the full game tree to `depth` as DOT, one node per tree node. MAX
// nodes are boxes, MIN nodes circles. Fill marks what a search touched:
// evaluated frontier nodes pink, solved interior nodes blue, anything else it
// visited grey, never-visited nodes white.
template <Game G>
void write_dot(std::ostream& os, const G& g, const typename G::State& root, int depth,
               const std::set<DeweyPath>& evaluated, const std::set<DeweyPath>& solved_interior,
               const std::set<DeweyPath>& touched, std::size_t node_limit = 100'000) {
    std::size_t emitted = 0;

    const auto node_name = [](const DeweyPath& p) {
        std::string s = "n";
        for (std::uint32_t ix : p.indices()) {
            s += '_';
            s += std::to_string(ix);
        }
        return s;
    };

    const auto emit = [&](const auto& self, const typename G::State& s, const DeweyPath& p,
                          int remaining) -> void {
        if (++emitted > node_limit) throw std::runtime_error("write_dot: node budget exceeded");
        const bool frontier = remaining == 0 || g.is_terminal(s);
        std::string fill = "white";
        if (evaluated.count(p)) fill = "lightpink";
        else if (solved_interior.count(p)) fill = "lightblue";
        else if (touched.count(p)) fill = "lightgrey";
        std::string label = p.to_string();
        if (frontier) label += "\\n" + std::to_string(g.evaluate(s));
        os << "  " << node_name(p) << " [shape="
           << (g.player(s) == Player::Max ? "box" : "circle") << ", style=filled, fillcolor="
           << fill << ", label=\"" << label << "\"];\n";
        if (frontier) return;
        const auto actions = g.moves(s);
        for (std::uint32_t i = 0; i < actions.size(); ++i) {
            const DeweyPath cp = p.child(i);
            os << "  " << node_name(p) << " -> " << node_name(cp) << " [label=\""
               << g.action_name(actions[i]) << "\"];\n";
            self(self, g.apply(s, actions[i]), cp, remaining - 1);
        }
    };

    os << "digraph search_tree {\n";
    emit(emit, root, DeweyPath{}, depth);
    os << "}\n";
}

} // namespace gts
