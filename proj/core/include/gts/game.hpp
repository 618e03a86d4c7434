#pragma once

#include <concepts>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gts/othello.hpp"
#include "gts/rng.hpp"
#include "gts/synthetic.hpp"

namespace gts {

// The capability bundle every searcher runs against. Move order is the
// adapter's natural order and must be deterministic for a given state.
// evaluate() is always from the root player's (MAX's) point of view.
template <typename G>
concept Game = requires(const G& g, const typename G::State& s, const typename G::Action& a) {
    { g.moves(s) } -> std::same_as<std::vector<typename G::Action>>;
    { g.apply(s, a) } -> std::same_as<typename G::State>;
    { g.evaluate(s) } -> std::same_as<Score>;
    { g.is_terminal(s) } -> std::same_as<bool>;
    { g.key(s) } -> std::same_as<std::uint64_t>;
    { g.player(s) } -> std::same_as<Player>;
    { g.action_code(a) } -> std::same_as<int>;
    { g.action_name(a) } -> std::same_as<std::string>;
};

// Othello seen from the side to move at the search root; that side is MAX.
class OthelloGame {
public:
    using State = OthelloBoard;
    using Action = Move;

    explicit OthelloGame(Color max_color) : max_color_(max_color) {}
    static OthelloGame rooted_at(const OthelloBoard& b) { return OthelloGame(b.side_to_move); }

    std::vector<Move> moves(const OthelloBoard& s) const { return legal_moves(s); }
    OthelloBoard apply(const OthelloBoard& s, const Move& m) const { return apply_move(s, m); }
    Score evaluate(const OthelloBoard& s) const { return gts::evaluate(s, max_color_); }
    bool is_terminal(const OthelloBoard& s) const { return gts::is_terminal(s); }
    std::uint64_t key(const OthelloBoard& s) const { return zobrist_key(s); }
    Player player(const OthelloBoard& s) const {
        return s.side_to_move == max_color_ ? Player::Max : Player::Min;
    }
    int action_code(const Move& m) const { return m.is_pass() ? 64 : m.square; }
    std::string action_name(const Move& m) const { return gts::to_string(m); }

    Color max_color() const { return max_color_; }

private:
    Color max_color_;
};

// A SyntheticTree walked by child index; the root is MAX. Interior nodes get a
// seeded pseudo-random heuristic (used only as an ordering hint by iterative
// deepening); leaf values are the ground truth.
class SyntheticGame {
public:
    using State = DeweyPath;
    using Action = int;

    explicit SyntheticGame(const SyntheticTree& t) : tree_(&t) {}

    std::vector<int> moves(const DeweyPath& s) const {
        if (tree_->is_leaf(s)) return {};
        std::vector<int> out(static_cast<std::size_t>(tree_->branching()));
        for (int i = 0; i < tree_->branching(); ++i) out[static_cast<std::size_t>(i)] = i;
        return out;
    }
    DeweyPath apply(const DeweyPath& s, const int& c) const {
        return s.child(static_cast<std::uint32_t>(c));
    }
    Score evaluate(const DeweyPath& s) const {
        if (tree_->is_leaf(s)) return tree_->leaf_value(s);
        const std::uint64_t h = mix64(tree_->seed() ^ (tree_->node_id(s) * 0x9E3779B97F4A7C15ULL));
        return static_cast<Score>(h % tree_->leaf_count());
    }
    bool is_terminal(const DeweyPath& s) const { return tree_->is_leaf(s); }
    std::uint64_t key(const DeweyPath& s) const { return tree_->node_id(s); }
    Player player(const DeweyPath& s) const {
        return s.depth() % 2 == 0 ? Player::Max : Player::Min;
    }
    int action_code(const int& c) const { return c; }
    std::string action_name(const int& c) const { return std::to_string(c); }

    const SyntheticTree& tree() const { return *tree_; }

private:
    const SyntheticTree* tree_;
};

static_assert(Game<OthelloGame>);
static_assert(Game<SyntheticGame>);

// Forwards to an underlying game and remembers the key of every state it was
// asked to evaluate. Used for evaluated-leaf-set comparisons.
template <Game G>
class RecordingGame {
public:
    using State = typename G::State;
    using Action = typename G::Action;

    explicit RecordingGame(const G& g) : g_(&g) {}

    std::vector<Action> moves(const State& s) const { return g_->moves(s); }
    State apply(const State& s, const Action& a) const { return g_->apply(s, a); }
    Score evaluate(const State& s) const {
        evaluated_.insert(g_->key(s));
        return g_->evaluate(s);
    }
    bool is_terminal(const State& s) const { return g_->is_terminal(s); }
    std::uint64_t key(const State& s) const { return g_->key(s); }
    Player player(const State& s) const { return g_->player(s); }
    int action_code(const Action& a) const { return g_->action_code(a); }
    std::string action_name(const Action& a) const { return g_->action_name(a); }

    const std::set<std::uint64_t>& evaluated() const { return evaluated_; }

private:
    const G* g_;
    mutable std::set<std::uint64_t> evaluated_;
};

static_assert(Game<RecordingGame<SyntheticGame>>);

} // namespace gts
