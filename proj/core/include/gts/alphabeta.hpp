#pragma once

#include <stdexcept>

#include "gts/game.hpp"
#include "gts/search.hpp"

namespace gts {

// Vanilla fail-soft alpha-beta. Children are explored strictly in the
// adapter's natural order. With r the return and v the true minimax value:
// alpha < r < beta means r = v, r <= alpha means v <= r, r >= beta means
// v >= r.
template <Game G>
class AlphaBetaSearch {
public:
    using State = typename G::State;
    using Action = typename G::Action;

    AlphaBetaSearch(const G& g, const SearchOptions& opt = {}) : g_(g), budget_(opt.leaf_budget) {}

    SearchResult<Action> run(const State& root, int depth, Score alpha = -kInf, Score beta = kInf) {
        if (alpha >= beta) throw std::invalid_argument("alphabeta: requires alpha < beta");
        if (depth < 0) throw std::invalid_argument("alphabeta: depth must be >= 0");
        SearchResult<Action> res;
        if (depth == 0 || g_.is_terminal(root)) {
            res.value = leaf(root);
        } else {
            ++stats_.interior_expansions;
            const bool maximizing = g_.player(root) == Player::Max;
            Score best = maximizing ? -kInf : kInf;
            for (const Action& m : g_.moves(root)) {
                const Score v = search(g_.apply(root, m), depth - 1, alpha, beta);
                if (maximizing) {
                    if (v > best) {
                        best = v;
                        res.best_move = m;
                    }
                    if (v > alpha) alpha = v;
                    if (v >= beta) break;
                } else {
                    if (v < best) {
                        best = v;
                        res.best_move = m;
                    }
                    if (v < beta) beta = v;
                    if (v <= alpha) break;
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
        if (++stats_.leaf_evals > budget_) throw BudgetExceeded("alphabeta: leaf budget exceeded");
        return g_.evaluate(s);
    }

    Score search(const State& s, int depth, Score alpha, Score beta) {
        if (depth == 0 || g_.is_terminal(s)) return leaf(s);
        ++stats_.interior_expansions;
        const bool maximizing = g_.player(s) == Player::Max;
        Score best = maximizing ? -kInf : kInf;
        for (const Action& m : g_.moves(s)) {
            const Score v = search(g_.apply(s, m), depth - 1, alpha, beta);
            if (maximizing) {
                if (v > best) best = v;
                if (v > alpha) alpha = v;
                if (v >= beta) break;
            } else {
                if (v < best) best = v;
                if (v < beta) beta = v;
                if (v <= alpha) break;
            }
        }
        return best;
    }

    const G& g_;
    SearchStats stats_;
    std::uint64_t budget_;
};

template <Game G>
SearchResult<typename G::Action> alphabeta(const G& g, const typename G::State& root, int depth,
                                           Score alpha = -kInf, Score beta = kInf,
                                           const SearchOptions& opt = {}) {
    return AlphaBetaSearch<G>(g, opt).run(root, depth, alpha, beta);
}

} // namespace gts
