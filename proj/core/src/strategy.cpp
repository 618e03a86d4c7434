#include "gts/strategy.hpp"

#include <algorithm>
#include <stdexcept>

namespace gts {

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t{1} << 63;
constexpr std::uint64_t kEnumerationGuard = 1'000'000;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSaturated / b + 1) return kSaturated;
    const std::uint64_t r = a * b;
    return r >= kSaturated ? kSaturated : r;
}

// Count by level: at MAX pick one child (sum), at MIN keep all (product).
std::uint64_t count_at(const SyntheticTree& t, int level) {
    if (level == t.depth()) return 1;
    const std::uint64_t sub = count_at(t, level + 1);
    const auto w = static_cast<std::uint64_t>(t.branching());
    if (level % 2 == 0) return sat_mul(w, sub);
    std::uint64_t prod = 1;
    for (int i = 0; i < t.branching(); ++i) prod = sat_mul(prod, sub);
    return prod;
}

std::vector<Strategy> enum_at(const SyntheticTree& t, const DeweyPath& p) {
    if (t.is_leaf(p)) {
        Strategy s;
        s.leaf_paths.insert(p);
        return {std::move(s)};
    }
    std::vector<Strategy> out;
    if (p.depth() % 2 == 0) {
        // MAX: one choice per child, each sub-strategy tagged with it
        for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(t.branching()); ++c) {
            for (Strategy sub : enum_at(t, p.child(c))) {
                sub.move_choices.emplace(p, c);
                out.push_back(std::move(sub));
            }
        }
    } else {
        // MIN: every child included, sub-strategies combine independently
        out.emplace_back();
        for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(t.branching()); ++c) {
            std::vector<Strategy> subs = enum_at(t, p.child(c));
            std::vector<Strategy> merged;
            merged.reserve(out.size() * subs.size());
            for (const Strategy& base : out) {
                for (const Strategy& sub : subs) {
                    Strategy m = base;
                    m.move_choices.insert(sub.move_choices.begin(), sub.move_choices.end());
                    m.leaf_paths.insert(sub.leaf_paths.begin(), sub.leaf_paths.end());
                    merged.push_back(std::move(m));
                }
            }
            out = std::move(merged);
        }
    }
    return out;
}

Score minimax_at(const SyntheticTree& t, const DeweyPath& p) {
    if (t.is_leaf(p)) return t.leaf_value(p);
    const bool maximizing = p.depth() % 2 == 0;
    Score best = maximizing ? -kInf : kInf;
    for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(t.branching()); ++c) {
        const Score v = minimax_at(t, p.child(c));
        best = maximizing ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

void cover_at(const SyntheticTree& t, const DeweyPath& p, std::set<DeweyPath>& out) {
    if (t.is_leaf(p)) {
        out.insert(p);
        return;
    }
    if (p.depth() % 2 == 0) {
        for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(t.branching()); ++c)
            cover_at(t, p.child(c), out);
    } else {
        cover_at(t, p.child(0), out);
    }
}

} // namespace

std::uint64_t count_strategies(const SyntheticTree& tree) { return count_at(tree, 0); }

std::vector<Strategy> enumerate_strategies(const SyntheticTree& tree) {
    if (count_strategies(tree) > kEnumerationGuard)
        throw std::invalid_argument("enumerate_strategies: more than 10^6 strategies");
    return enum_at(tree, DeweyPath{});
}

Score strategy_value(const SyntheticTree& tree, const Strategy& s) {
    if (s.leaf_paths.empty()) throw std::invalid_argument("strategy_value: strategy has no leaves");
    Score v = kInf;
    for (const DeweyPath& leaf : s.leaf_paths) v = std::min(v, tree.leaf_value(leaf));
    return v;
}

Score tree_minimax_value(const SyntheticTree& tree) { return minimax_at(tree, DeweyPath{}); }

bool check_strategy_theorem(const SyntheticTree& tree) {
    const std::vector<Strategy> strategies = enumerate_strategies(tree);
    Score best = -kInf;
    for (const Strategy& s : strategies) {
        const Score v = strategy_value(tree, s);
        best = std::max(best, v);
        for (const DeweyPath& leaf : s.leaf_paths)
            if (tree.leaf_value(leaf) < v) return false; // a leaf must bound its strategies
    }
    return best == tree_minimax_value(tree);
}

std::set<DeweyPath> cluster_cover(const SyntheticTree& tree) {
    std::set<DeweyPath> out;
    cover_at(tree, DeweyPath{}, out);
    return out;
}

} // namespace gts
