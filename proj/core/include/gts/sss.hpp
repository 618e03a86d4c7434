#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gts/game.hpp"
#include "gts/open_list.hpp"
#include "gts/search.hpp"

namespace gts {

// The gamma operator's case analysis. Forward cases descend towards the
// frontier; backup cases propagate solved bounds.
enum class GammaCase : std::uint8_t { F1, F2, F3, B1, B2, B3, B4 };

inline const char* to_string(GammaCase c) {
    switch (c) {
        case GammaCase::F1: return "F1";
        case GammaCase::F2: return "F2";
        case GammaCase::F3: return "F3";
        case GammaCase::B1: return "B1";
        case GammaCase::B2: return "B2";
        case GammaCase::B3: return "B3";
        default: return "B4";
    }
}

// One gamma application: which case fired, what was popped, what was pushed,
// how many states a purge removed.
struct StepRecord {
    struct StateInfo {
        DeweyPath path;
        SssStatus status = SssStatus::Live;
        Score merit = 0;
    };

    int step = 0;
    GammaCase case_id = GammaCase::F1;
    StateInfo popped;
    std::vector<StateInfo> pushed;
    std::size_t purged = 0;
    std::size_t open_size_after = 0;
    std::optional<Score> final_value; // set by B1
};

// Best-first state-space search over partial strategies. OPEN holds
// <name, live/solved, bound> states; each gamma_step pops the head and applies
// exactly one case:
//   F1  live MAX interior  -> push all children live at the same bound
//   F2  live MIN interior  -> push the first child live at the same bound
//   F3  live frontier      -> re-push solved at min(eval, bound)
//   B1  solved root        -> terminate; the bound is the minimax value
//   B2  solved, parent MAX -> solve the parent, purge its other descendants
//   B3  solved, parent MIN, untried sibling -> push that sibling live
//   B4  solved, parent MIN, siblings done   -> solve the parent
// Node type is the side to move there, with MAX the root's side.
template <Game G>
class SssSearch {
public:
    using State = typename G::State;
    using Action = typename G::Action;

    SssSearch(const G& g, const State& root, int depth, const SearchOptions& opt = {})
        : g_(g), depth_(depth), budget_(opt.leaf_budget) {
        if (depth < 0) throw std::invalid_argument("sss: depth must be >= 0");
        if (g_.player(root) != Player::Max)
            throw std::logic_error("sss: the root must belong to the maximizing side");
        open_.push(SssState<State>{DeweyPath{}, SssStatus::Live, kInf, Player::Max, root});
    }

    bool done() const { return done_; }

    Score value() const {
        if (!done_) throw std::logic_error("sss: value requested before termination");
        return value_;
    }

    std::optional<Action> best_move() const { return best_; }

    const OpenList<State>& open() const { return open_; }

    SearchStats stats() const {
        SearchStats s = stats_;
        s.open_peak = open_.peak();
        s.leaf_evals_final_iter = s.leaf_evals;
        return s;
    }

    StepRecord gamma_step() {
        if (done_) throw std::logic_error("sss: gamma_step after termination");
        SssState<State> head = open_.pop_max();
        StepRecord rec;
        rec.step = ++step_no_;
        rec.popped = {head.path, head.status, head.merit};
        ++stats_.gamma_iterations;

        const auto push = [&](SssState<State> s) {
            rec.pushed.push_back({s.path, s.status, s.merit});
            open_.push(std::move(s));
        };

        if (head.status == SssStatus::Live) {
            const bool frontier =
                head.path.depth() >= static_cast<std::size_t>(depth_) || g_.is_terminal(head.board);
            if (frontier) {
                rec.case_id = GammaCase::F3;
                if (++stats_.leaf_evals > budget_) throw BudgetExceeded("sss: leaf budget exceeded");
                const Score v = g_.evaluate(head.board);
                push({head.path, SssStatus::Solved, v < head.merit ? v : head.merit,
                      head.node_player, head.board});
            } else if (head.node_player == Player::Max) {
                rec.case_id = GammaCase::F1;
                const Expansion& exp = expand(head.path, head.board);
                for (std::uint32_t i = 0; i < exp.actions.size(); ++i) {
                    State child = g_.apply(exp.board, exp.actions[i]);
                    const Player p = g_.player(child);
                    push({head.path.child(i), SssStatus::Live, head.merit, p, std::move(child)});
                }
            } else {
                rec.case_id = GammaCase::F2;
                const Expansion& exp = expand(head.path, head.board);
                State child = g_.apply(exp.board, exp.actions[0]);
                const Player p = g_.player(child);
                push({head.path.child(0), SssStatus::Live, head.merit, p, std::move(child)});
            }
        } else if (head.path.is_root()) {
            rec.case_id = GammaCase::B1;
            done_ = true;
            value_ = head.merit;
            rec.final_value = head.merit;
        } else {
            const DeweyPath parent_path = head.path.parent();
            const auto pit = expanded_.find(parent_path);
            if (pit == expanded_.end())
                throw std::logic_error("sss: backup reached an unexpanded parent (gamma-logic bug)");
            const Expansion& pexp = pit->second;
            const Player parent_player = g_.player(pexp.board);
            if (parent_player == Player::Max) {
                rec.case_id = GammaCase::B2;
                push({parent_path, SssStatus::Solved, head.merit, parent_player, pexp.board});
                rec.purged = open_.purge_descendants(parent_path);
                if (parent_path.is_root()) best_ = pexp.actions[head.path.last()];
            } else {
                const std::uint32_t next = head.path.last() + 1;
                if (next < pexp.actions.size()) {
                    rec.case_id = GammaCase::B3;
                    State sib = g_.apply(pexp.board, pexp.actions[next]);
                    const Player p = g_.player(sib);
                    push({parent_path.child(next), SssStatus::Live, head.merit, p, std::move(sib)});
                } else {
                    rec.case_id = GammaCase::B4;
                    push({parent_path, SssStatus::Solved, head.merit, parent_player, pexp.board});
                }
            }
        }
        rec.open_size_after = open_.size();
        return rec;
    }

private:
    struct Expansion {
        State board{};
        std::vector<Action> actions;
    };

    const Expansion& expand(const DeweyPath& p, const State& s) {
        auto [it, inserted] = expanded_.try_emplace(p);
        if (inserted) {
            it->second.board = s;
            it->second.actions = g_.moves(s);
            ++stats_.interior_expansions;
        }
        return it->second;
    }

    const G& g_;
    int depth_;
    std::uint64_t budget_;
    OpenList<State> open_;
    std::map<DeweyPath, Expansion> expanded_;
    SearchStats stats_;
    bool done_ = false;
    Score value_ = 0;
    std::optional<Action> best_;
    int step_no_ = 0;
};

// Runs gamma_step from <root, LIVE, +INF> until B1 fires.
template <Game G>
SearchResult<typename G::Action> sss_star(const G& g, const typename G::State& root, int depth,
                                          const SearchOptions& opt = {}) {
    SssSearch<G> search(g, root, depth, opt);
    while (!search.done()) search.gamma_step();
    SearchResult<typename G::Action> res;
    res.value = search.value();
    res.best_move = search.best_move();
    res.stats = search.stats();
    return res;
}

} // namespace gts
