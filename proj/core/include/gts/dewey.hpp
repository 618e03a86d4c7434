#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gts {

// Node name: the sequence of child indices from the root. Lexicographic order,
// so a node sorts before all of its descendants and ancestry is a prefix test.
class DeweyPath {
public:
    DeweyPath() = default;
    explicit DeweyPath(std::vector<std::uint32_t> ix) : ix_(std::move(ix)) {}

    bool is_root() const { return ix_.empty(); }
    std::size_t depth() const { return ix_.size(); }
    std::uint32_t operator[](std::size_t i) const { return ix_[i]; }
    std::uint32_t last() const { return ix_.back(); }
    const std::vector<std::uint32_t>& indices() const { return ix_; }

    DeweyPath child(std::uint32_t i) const {
        std::vector<std::uint32_t> v = ix_;
        v.push_back(i);
        return DeweyPath(std::move(v));
    }

    // pre: !is_root()
    DeweyPath parent() const {
        std::vector<std::uint32_t> v(ix_.begin(), ix_.end() - 1);
        return DeweyPath(std::move(v));
    }

    bool is_proper_prefix_of(const DeweyPath& other) const {
        if (ix_.size() >= other.ix_.size()) return false;
        return std::equal(ix_.begin(), ix_.end(), other.ix_.begin());
    }

    auto operator<=>(const DeweyPath&) const = default;

    std::string to_string() const {
        if (ix_.empty()) return "root";
        std::string s;
        for (std::size_t i = 0; i < ix_.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(ix_[i]);
        }
        return s;
    }

private:
    std::vector<std::uint32_t> ix_;
};

} // namespace gts
