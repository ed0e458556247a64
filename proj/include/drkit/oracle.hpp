#pragma once

// Exponential-time ground truth for small families, plus the seeded
// generator used for reproducible experiments. The brute force finds a
// maximum-cardinality subset with ratio <= C; supersets of any violating
// subset are pruned, which is sound because the ratio only grows under
// supersets.

#include "drkit/distance.hpp"
#include "drkit/rational.hpp"
#include "drkit/support_vector.hpp"

#include <cstdint>
#include <vector>

namespace drkit {

struct OracleResult {
    std::vector<std::size_t> subset;  // 0-based, ascending
    std::int64_t size = 0;
    Rational ratio;                   // ratio of the chosen subset (1 below two vectors)
    std::uint64_t explored = 0;       // subsets materialized by the search
    std::uint64_t pruned = 0;         // extensions cut off by the ratio bound
};

// Maximum-cardinality subset with distance ratio <= C; ties resolve to the
// lexicographically smallest index list. Errors when |K| exceeds cap.
OracleResult best_subset_bruteforce(const VectorFamily& fam, const Rational& C, Index cap);

struct AlphaProbe {
    std::int64_t oracle_size = 0;
    double exponent = 0.0;  // ln(size)/ln(|K|), display only
};

// Empirical exponent of the best subset; needs |K| >= 2.
AlphaProbe empirical_alpha(const VectorFamily& fam, const Rational& C, Index cap);

std::uint64_t splitmix64_next(std::uint64_t& state);

// m distinct weight-p supports drawn uniformly without replacement: a
// splitmix64 stream drives a p-step partial Fisher-Yates per vector,
// duplicates are rejected and redrawn. Fixed (n, p, m, seed) reproduces
// the family byte for byte.
VectorFamily random_family(Index n, Index p, Index m, std::uint64_t seed);

}  // namespace drkit
