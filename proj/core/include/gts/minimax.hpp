#pragma once

#include <stdexcept>

#include "gts/game.hpp"
#include "gts/search.hpp"

namespace gts {

// Exhaustive depth-limited minimax. No pruning; the oracle every other
// searcher is checked against.
template <Game G>
class MinimaxSearch {
public:
    using State = typename G::State;
    using Action = typename G::Action;

    MinimaxSearch(const G& g, const SearchOptions& opt = {}) : g_(g), budget_(opt.leaf_budget) {}

    SearchResult<Action> run(const State& root, int depth) {
        if (depth < 0) throw std::invalid_argument("minimax: depth must be >= 0");
        SearchResult<Action> res;
        if (depth == 0 || g_.is_terminal(root)) {
            res.value = leaf(root);
        } else {
            ++stats_.interior_expansions;
            const bool maximizing = g_.player(root) == Player::Max;
            Score best = maximizing ? -kInf : kInf;
            for (const Action& m : g_.moves(root)) {
                const Score v = search(g_.apply(root, m), depth - 1);
                if (maximizing ? v > best : v < best) {
                    best = v;
                    res.best_move = m;
                }
            }
            res.value = best;
        }
        stats_.leaf_evals_final_iter = stats_.leaf_evals;
        res.stats = stats_;
        return res;
    }

private:
    Score leaf(const State& s) {
        if (++stats_.leaf_evals > budget_) throw BudgetExceeded("minimax: leaf budget exceeded");
        return g_.evaluate(s);
    }

    Score search(const State& s, int depth) {
        if (depth == 0 || g_.is_terminal(s)) return leaf(s);
        ++stats_.interior_expansions;
        const bool maximizing = g_.player(s) == Player::Max;
        Score best = maximizing ? -kInf : kInf;
        for (const Action& m : g_.moves(s)) {
            const Score v = search(g_.apply(s, m), depth - 1);
            if (maximizing ? v > best : v < best) best = v;
        }
        return best;
    }

    const G& g_;
    SearchStats stats_;
    std::uint64_t budget_;
};

template <Game G>
SearchResult<typename G::Action> minimax(const G& g, const typename G::State& root, int depth,
                                         const SearchOptions& opt = {}) {
    return MinimaxSearch<G>(g, opt).run(root, depth);
}

} // namespace gts
