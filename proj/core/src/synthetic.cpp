#include "gts/synthetic.hpp"

#include <numeric>
#include <stdexcept>

#include "gts/rng.hpp"

namespace gts {

SyntheticTree SyntheticTree::with_leaves(int w, int d, std::vector<Score> leaves) {
    if (w < 1 || d < 0) throw std::invalid_argument("with_leaves: need w >= 1 and d >= 0");
    std::size_t expect = 1;
    for (int i = 0; i < d; ++i) {
        expect *= static_cast<std::size_t>(w);
        if (expect > (1u << 24)) throw std::invalid_argument("with_leaves: w^d exceeds 2^24");
    }
    if (leaves.size() != expect) throw std::invalid_argument("with_leaves: leaf count must be w^d");
    return SyntheticTree(w, d, 0, std::move(leaves));
}

std::size_t SyntheticTree::leaf_index(const DeweyPath& p) const {
    if (!is_leaf(p)) throw std::logic_error("leaf_index: path is not a leaf");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p.depth(); ++i) idx = idx * static_cast<std::size_t>(w_) + p[i];
    return idx;
}

std::uint64_t SyntheticTree::node_id(const DeweyPath& p) const {
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < p.depth(); ++i)
        id = id * static_cast<std::uint64_t>(w_) + 1 + p[i];
    return id;
}

SyntheticTree gen_tree(int w, int d, std::uint64_t seed) {
    if (w < 1) throw std::invalid_argument("gen_tree: branching must be >= 1");
    if (d < 0) throw std::invalid_argument("gen_tree: depth must be >= 0");
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) {
        n *= static_cast<std::uint64_t>(w);
        if (n > (1u << 24)) throw std::invalid_argument("gen_tree: w^d exceeds 2^24");
    }
    std::vector<Score> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 0);
    SplitMix64 rng(seed);
    for (std::uint64_t i = n; i > 1; --i) {
        const std::uint64_t j = rng.below(i);
        std::swap(leaves[i - 1], leaves[j]);
    }
    SyntheticTree t(w, d, seed, std::move(leaves));
    return t;
}

} // namespace gts
