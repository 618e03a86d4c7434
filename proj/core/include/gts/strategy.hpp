#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gts/synthetic.hpp"

namespace gts {

// One MAX choice at every reachable MAX node, every MIN reply included. Its
// value is the minimum over its leaves: once MAX commits, MIN drives the
// outcome.
struct Strategy {
    std::map<DeweyPath, std::uint32_t> move_choices; // MAX-node path -> child index
    std::set<DeweyPath> leaf_paths;
};

// Exact strategy count, saturating at 2^63.
std::uint64_t count_strategies(const SyntheticTree& tree);

// All distinct strategies. Throws std::invalid_argument when the count
// exceeds the 10^6 enumeration guard.
std::vector<Strategy> enumerate_strategies(const SyntheticTree& tree);

Score strategy_value(const SyntheticTree& tree, const Strategy& s);

// Minimax of the tree by direct recursion over the leaf array; independent of
// the engines module.
Score tree_minimax_value(const SyntheticTree& tree);

// True iff max over strategies of strategy_value equals the minimax value and
// every leaf's value upper-bounds every strategy containing it.
bool check_strategy_theorem(const SyntheticTree& tree);

// Frontier of taking all children at MAX nodes and the first child at MIN
// nodes; one representative leaf per cluster, touching every strategy.
std::set<DeweyPath> cluster_cover(const SyntheticTree& tree);

} // namespace gts
