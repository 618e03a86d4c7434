#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gts/game.hpp"
#include "gts/search.hpp"
#include "gts/transposition.hpp"

namespace gts {

// SSS* recast as repeated null-window alpha-beta over one transposition
// table. At each depth stage g starts at +INF and every pass tests the window
// (g-1, g) until a pass returns its own test value; the stage sequence of g
// values is strictly decreasing. Two-sided bounds persist across passes,
// frontier values are cached at depth 0, and each pass tries the stored best
// move first, so later passes re-derive only what the table does not already
// know. Deepening stages share the table, which seeds move ordering the same
// way iterative deepening does for alpha-beta.
template <Game G>
class MtSssSearch {
public:
    using State = typename G::State;
    using Action = typename G::Action;

    // deepen: run the test loop at depths 1..depth over one table (the
    // benchmarked configuration); off = a single fixed-depth loop.
    MtSssSearch(const G& g, const SearchOptions& opt = {}, bool deepen = true)
        : g_(g), tt_(opt.tt_capacity), budget_(opt.leaf_budget), deepen_(deepen) {}

    // gamma_log, when given, receives the test-value sequence of every
    // deepening stage.
    SearchResult<Action> run(const State& root, int depth,
                             std::vector<std::vector<Score>>* gamma_log = nullptr) {
        if (depth < 1) throw std::invalid_argument("mt_sss: depth must be >= 1");
        SearchResult<Action> res;
        if (g_.is_terminal(root)) {
            res.value = leaf(root);
            stats_.leaf_evals_final_iter = stats_.leaf_evals;
            finish(res);
            return res;
        }
        const std::uint64_t root_key = g_.key(root);
        const int first_stage = deepen_ ? 1 : depth;
        for (int stage = first_stage; stage <= depth; ++stage) {
            if (gamma_log) gamma_log->emplace_back();
            const std::uint64_t leaves_before = stats_.leaf_evals;
            Score g_val = kInf;
            while (true) {
                const Score gamma = g_val;
                if (gamma_log) gamma_log->back().push_back(gamma);
                ++stats_.gamma_iterations;
                const Score r = search(root, stage, gamma - 1, gamma);
                if (r > gamma)
                    throw std::logic_error("mt_sss: pass exceeded its own upper bound (engine bug)");
                g_val = r;
                if (g_val == gamma) break;
            }
            res.value = g_val;
            stats_.leaf_evals_final_iter = stats_.leaf_evals - leaves_before;
        }
        res.best_move = root_best(root, root_key);
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
        if (++stats_.leaf_evals > budget_) throw BudgetExceeded("mt_sss: leaf budget exceeded");
        return g_.evaluate(s);
    }

    Score search(const State& s, int depth, Score alpha, Score beta) {
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
        if (depth == 0 || g_.is_terminal(s)) {
            const Score v = leaf(s);
            tt_.store(key, 0, v, v, -1);
            return v;
        }
        ++stats_.interior_expansions;
        std::vector<Action> moves = g_.moves(s);
        if (tt_move >= 0) {
            // stored best move first, the rest keep the natural order
            for (std::size_t i = 0; i < moves.size(); ++i) {
                if (g_.action_code(moves[i]) == tt_move) {
                    std::rotate(moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(i),
                                moves.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                    break;
                }
            }
        }
        const bool maximizing = g_.player(s) == Player::Max;
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
                if (v >= beta) break;
            } else {
                if (v < best) {
                    best = v;
                    best_code = g_.action_code(m);
                }
                if (v < beta) beta = v;
                if (v <= alpha) break;
            }
        }
        if (best <= alpha0) tt_.store(key, depth, -kInf, best, best_code);
        else if (best >= beta0) tt_.store(key, depth, best, kInf, best_code);
        else tt_.store(key, depth, best, best, best_code);
        return best;
    }

    // The final pass failed high at the root; the move it stored there is one
    // whose subtree value equals the root value.
    std::optional<Action> root_best(const State& root, std::uint64_t root_key) {
        const TTEntry* e = tt_.find(root_key);
        if (e == nullptr || e->move_code < 0) return std::nullopt;
        for (const Action& m : g_.moves(root))
            if (g_.action_code(m) == e->move_code) return m;
        throw std::logic_error("mt_sss: stored root move is not a legal root move");
    }

    const G& g_;
    TranspositionTable tt_;
    SearchStats stats_;
    std::uint64_t budget_;
    bool deepen_;
};

template <Game G>
SearchResult<typename G::Action> mt_sss(const G& g, const typename G::State& root, int depth,
                                        const SearchOptions& opt = {},
                                        std::vector<std::vector<Score>>* gamma_log = nullptr) {
    return MtSssSearch<G>(g, opt).run(root, depth, gamma_log);
}

} // namespace gts
