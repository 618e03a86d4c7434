#pragma once

#include <cstdint>
#include <vector>

#include "gts/dewey.hpp"
#include "gts/types.hpp"

namespace gts {

// Uniform branching-w, depth-d tree with explicit leaf values, addressed by
// DeweyPath. Leaves are stored left to right: leaf index is the path read as a
// base-w number.
class SyntheticTree {
public:
    static SyntheticTree with_leaves(int w, int d, std::vector<Score> leaves);

    int branching() const { return w_; }
    int depth() const { return d_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t leaf_count() const { return leaves_.size(); }
    const std::vector<Score>& leaves() const { return leaves_; }

    bool is_leaf(const DeweyPath& p) const { return p.depth() == static_cast<std::size_t>(d_); }
    std::size_t leaf_index(const DeweyPath& p) const;
    Score leaf_value(const DeweyPath& p) const { return leaves_[leaf_index(p)]; }

    // Complete w-ary numbering: root 0, child c of id is id*w + 1 + c. Unique
    // per node, used as the transposition key.
    std::uint64_t node_id(const DeweyPath& p) const;

private:
    SyntheticTree(int w, int d, std::uint64_t seed, std::vector<Score> leaves)
        : w_(w), d_(d), seed_(seed), leaves_(std::move(leaves)) {}

    int w_ = 1;
    int d_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<Score> leaves_;

    friend SyntheticTree gen_tree(int w, int d, std::uint64_t seed);
};

// Leaves are a seeded permutation of 0..w^d - 1 (all distinct), identical for
// identical arguments. Throws std::invalid_argument if w < 1, d < 0, or
// w^d > 2^24.
SyntheticTree gen_tree(int w, int d, std::uint64_t seed);

} // namespace gts
