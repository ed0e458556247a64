#pragma once

// Constant-weight binary vectors stored as sorted supports. The recursive
// constructions push n far beyond p, so storage and distance are O(p) and
// never touch a length-n bit array.

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace drkit {

using Index = std::int64_t;

struct SupportVector {
    Index dimension = 0;
    std::vector<Index> support;  // strictly increasing, 1-based

    // Validates: indices in [1, dimension], strictly increasing.
    static SupportVector make(Index dimension, std::vector<Index> support);

    Index weight() const { return static_cast<Index>(support.size()); }

    friend bool operator==(const SupportVector& a, const SupportVector& b) {
        return a.dimension == b.dimension && a.support == b.support;
    }
};

// Hamming distance |supp(u) xor supp(v)| via sorted merge. Dimensions must
// agree; equal-weight inputs always yield an even result in [0, 2p].
Index distance(const SupportVector& u, const SupportVector& v);

namespace detail {
// No dimension check; for inner loops over a single family.
Index distance_unchecked(const SupportVector& u, const SupportVector& v);
std::uint64_t support_hash(const std::vector<Index>& support);
}  // namespace detail

// Ordered set of distinct vectors sharing (dimension, weight). Iteration
// order is insertion order and is part of every downstream contract.
class VectorFamily {
public:
    VectorFamily(Index dimension, Index weight);

    void push_back(SupportVector v);  // rejects wrong shape and duplicates
    bool contains(const SupportVector& v) const;

    Index dimension() const { return dimension_; }
    Index weight() const { return weight_; }
    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }

    const SupportVector& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<SupportVector>& vectors() const { return vectors_; }

    auto begin() const { return vectors_.begin(); }
    auto end() const { return vectors_.end(); }

    friend bool operator==(const VectorFamily& a, const VectorFamily& b) {
        return a.dimension_ == b.dimension_ && a.weight_ == b.weight_ && a.vectors_ == b.vectors_;
    }

private:
    Index dimension_;
    Index weight_;
    std::vector<SupportVector> vectors_;
    std::unordered_multimap<std::uint64_t, std::size_t> index_by_hash_;
};

}  // namespace drkit
