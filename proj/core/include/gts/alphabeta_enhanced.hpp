#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gts/alphabeta.hpp"
#include "gts/game.hpp"
#include "gts/history.hpp"
#include "gts/search.hpp"
#include "gts/transposition.hpp"

namespace gts {

// Iterative deepening with a transposition table and the history heuristic.
// Interior move order: TT best move first, then descending history, then the
// natural order. Root moves are re-sorted between iterations by the previous
// iteration's child values. The outer call runs the full window, so the final
// value is the exact minimax value.
template <Game G>
class EnhancedAlphaBeta {
public:
    using State = typename G::State;
    using Action = typename G::Action;

    EnhancedAlphaBeta(const G& g, const SearchOptions& opt = {})
        : g_(g), tt_(opt.tt_capacity), budget_(opt.leaf_budget) {}

    SearchResult<Action> run(const State& root, int depth) {
        if (depth < 1) throw std::invalid_argument("ab_enhanced: depth must be >= 1");
        SearchResult<Action> res;
        if (g_.is_terminal(root)) {
            res.value = leaf(root);
            stats_.leaf_evals_final_iter = stats_.leaf_evals;
            finish(res);
            return res;
        }
        std::vector<Action> order = g_.moves(root);
        const std::uint64_t root_key = g_.key(root);
        const bool maximizing = g_.player(root) == Player::Max;
        for (int iter = 1; iter <= depth; ++iter) {
            const std::uint64_t leaves_before = stats_.leaf_evals;
            std::vector<Score> vals(order.size());
            Score alpha = -kInf, beta = kInf;
            Score best = maximizing ? -kInf : kInf;
            std::size_t best_i = 0;
            for (std::size_t i = 0; i < order.size(); ++i) {
                const Score v = search(g_.apply(root, order[i]), iter - 1, alpha, beta);
                vals[i] = v;
                if (maximizing) {
                    if (v > best) {
                        best = v;
                        best_i = i;
                    }
                    if (v > alpha) alpha = v;
                } else {
                    if (v < best) {
                        best = v;
                        best_i = i;
                    }
                    if (v < beta) beta = v;
                }
            }
            res.value = best;
            res.best_move = order[best_i];
            stats_.leaf_evals_final_iter = stats_.leaf_evals - leaves_before;
            tt_.store(root_key, iter, best, best, g_.action_code(order[best_i]));
            if (iter < depth) {
                std::vector<std::size_t> idx(order.size());
                std::iota(idx.begin(), idx.end(), std::size_t{0});
                std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                    return maximizing ? vals[a] > vals[b] : vals[a] < vals[b];
                });
                std::vector<Action> next;
                next.reserve(order.size());
                for (std::size_t i : idx) next.push_back(order[i]);
                order = std::move(next);
            }
        }
        finish(res);
        return res;
    }

    const TranspositionTable& table() const { return tt_; }

private:
    void finish(SearchResult<Action>& res) {
        stats_.tt_probes = tt_.probes();
        stats_.tt_hits = tt_.hits();
        stats_.tt_stores = tt_.stores();
        res.stats = stats_;
    }

    Score leaf(const State& s) {
        if (++stats_.leaf_evals > budget_)
            throw BudgetExceeded("ab_enhanced: leaf budget exceeded");
        return g_.evaluate(s);
    }

    Score search(const State& s, int depth, Score alpha, Score beta) {
        if (depth == 0 || g_.is_terminal(s)) return leaf(s);
        const std::uint64_t key = g_.key(s);
        int tt_move = -1;
        if (auto p = tt_.probe(key, depth)) {
            tt_move = p->move_code;
            if (p->has_bounds) {
                if (p->lower == p->upper) return p->lower;
                if (p->lower >= beta) return p->lower;
                if (p->upper <= alpha) return p->upper;
                if (p->lower > alpha) alpha = p->lower;
                if (p->upper < beta) beta = p->upper;
            }
        }
        ++stats_.interior_expansions;
        const Player side = g_.player(s);
        const bool maximizing = side == Player::Max;
        std::vector<Action> moves = g_.moves(s);
        order_moves(moves, side, tt_move);
        const Score alpha0 = alpha, beta0 = beta;
        Score best = maximizing ? -kInf : kInf;
        int best_code = -1;
        for (const Action& m : moves) {
            const Score v = search(g_.apply(s, m), depth - 1, alpha, beta);
            if (maximizing) {
                if (v > best) {
                    best = v;
                    best_code = g_.action_code(m);
                }
                if (v > alpha) alpha = v;
                if (v >= beta) {
                    hist_.bump(side, g_.action_code(m), depth);
                    break;
                }
            } else {
                if (v < best) {
                    best = v;
                    best_code = g_.action_code(m);
                }
                if (v < beta) beta = v;
                if (v <= alpha) {
                    hist_.bump(side, g_.action_code(m), depth);
                    break;
                }
            }
        }
        if (best <= alpha0) tt_.store(key, depth, -kInf, best, best_code);
        else if (best >= beta0) tt_.store(key, depth, best, kInf, best_code);
        else tt_.store(key, depth, best, best, best_code);
        return best;
    }

    void order_moves(std::vector<Action>& moves, Player side, int tt_move) const {
        if (moves.size() < 2) return;
        std::vector<std::uint64_t> rank(moves.size());
        bool any = false;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            const int code = g_.action_code(moves[i]);
            if (tt_move >= 0 && code == tt_move) {
                rank[i] = ~std::uint64_t{0};
                any = true;
            } else {
                rank[i] = hist_.get(side, code);
                any |= rank[i] != 0;
            }
        }
        if (!any) return; // natural order already
        std::vector<std::size_t> idx(moves.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return rank[a] > rank[b]; });
        std::vector<Action> out;
        out.reserve(moves.size());
        for (std::size_t i : idx) out.push_back(moves[i]);
        moves = std::move(out);
    }

    const G& g_;
    TranspositionTable tt_;
    HistoryTable hist_;
    SearchStats stats_;
    std::uint64_t budget_;
};

template <Game G>
SearchResult<typename G::Action> alphabeta_enhanced(const G& g, const typename G::State& root,
                                                    int depth, const SearchOptions& opt = {}) {
    return EnhancedAlphaBeta<G>(g, opt).run(root, depth);
}

} // namespace gts
