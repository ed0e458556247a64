#include "drkit/support_vector.hpp"

#include <stdexcept>
#include <string>

namespace drkit {

SupportVector SupportVector::make(Index dimension, std::vector<Index> support) {
    if (dimension <= 0) throw std::invalid_argument("dimension must be positive");
    Index prev = 0;
    for (Index idx : support) {
        if (idx < 1 || idx > dimension)
            throw std::invalid_argument("support index " + std::to_string(idx) + " outside [1, " +
                                        std::to_string(dimension) + "]");
        if (idx <= prev) throw std::invalid_argument("support indices must be strictly increasing");
        prev = idx;
    }
    return SupportVector{dimension, std::move(support)};
}

Index distance(const SupportVector& u, const SupportVector& v) {
    if (u.dimension != v.dimension)
        throw std::invalid_argument("distance requires equal dimensions (" + std::to_string(u.dimension) +
                                    " vs " + std::to_string(v.dimension) + ")");
    return detail::distance_unchecked(u, v);
}

namespace detail {

Index distance_unchecked(const SupportVector& u, const SupportVector& v) {
    // |A| + |B| - 2|A ∩ B|, intersection counted by sorted merge.
    const auto& a = u.support;
    const auto& b = v.support;
    std::size_t i = 0, j = 0;
    Index common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return static_cast<Index>(a.size()) + static_cast<Index>(b.size()) - 2 * common;
}

std::uint64_t support_hash(const std::vector<Index>& support) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (Index idx : support) {
        auto x = static_cast<std::uint64_t>(idx);
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (x >> (8 * byte)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace detail

VectorFamily::VectorFamily(Index dimension, Index weight) : dimension_(dimension), weight_(weight) {
    if (dimension <= 0) throw std::invalid_argument("family dimension must be positive");
    if (weight < 0 || weight > dimension) throw std::invalid_argument("family weight must lie in [0, dimension]");
}

bool VectorFamily::contains(const SupportVector& v) const {
    auto [lo, hi] = index_by_hash_.equal_range(detail::support_hash(v.support));
    for (auto it = lo; it != hi; ++it)
        if (vectors_[it->second].support == v.support) return true;
    return false;
}

void VectorFamily::push_back(SupportVector v) {
    if (v.dimension != dimension_)
        throw std::invalid_argument("vector dimension " + std::to_string(v.dimension) +
                                    " does not match family dimension " + std::to_string(dimension_));
    if (v.weight() != weight_)
        throw std::invalid_argument("vector weight " + std::to_string(v.weight()) +
                                    " does not match family weight " + std::to_string(weight_));
    if (contains(v)) throw std::invalid_argument("duplicate vector in family");
    index_by_hash_.emplace(detail::support_hash(v.support), vectors_.size());
    vectors_.push_back(std::move(v));
}

}  // namespace drkit
