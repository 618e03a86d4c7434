#pragma once

#include <cstdint>
#include <optional>

#include "gts/types.hpp"

namespace gts {

struct SearchStats {
    std::uint64_t leaf_evals = 0;
    // Last iterative-deepening iteration for ab_enhanced, last null-window
    // pass for mt_sss; equals leaf_evals for the single-pass engines.
    std::uint64_t leaf_evals_final_iter = 0;
    std::uint64_t interior_expansions = 0;
    std::uint64_t tt_probes = 0;
    std::uint64_t tt_hits = 0;
    std::uint64_t tt_stores = 0;
    std::uint64_t open_peak = 0;
    // mt_sss: null-window passes; sss: gamma-operator applications.
    std::uint64_t gamma_iterations = 0;
    std::uint64_t elapsed_ns = 0;
};

template <typename Action>
struct SearchResult {
    Score value = 0;
    std::optional<Action> best_move;
    SearchStats stats;
};

struct SearchOptions {
    std::size_t tt_capacity = std::size_t{1} << 20; // entries, power of two
    std::uint64_t leaf_budget = 100'000'000;        // BudgetExceeded beyond this
};

} // namespace gts
