#pragma once

// Combination enumeration shared by the slice stream, the exhaustive
// subset verifier, and feasibility checks.

#include "drkit/rational.hpp"
#include "drkit/support_vector.hpp"

#include <vector>

namespace drkit {

BigInt binomial(Index n, Index k);

// In-place successor of a k-combination of [1, n] in lexicographic order.
// `comb` must be a valid ascending combination; returns false after the
// last one ({n-k+1, ..., n}), leaving comb unspecified.
bool next_combination(std::vector<Index>& comb, Index n);

// rank -> combination, lexicographic order, rank in [0, C(n, k)).
std::vector<Index> unrank_combination(BigInt rank, Index n, Index k);

}  // namespace drkit
