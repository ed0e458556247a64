#pragma once

// Pairwise-distance kernels. The hot loops of the toolkit are all scans of
// this shape: min/max over pairs, min against an admitted set, exactness of
// a cross block. Results are exact integer reductions, so the OpenMP
// versions are bit-identical to the serial ones.
//
// drkit::serial holds the plain-loop reference implementations; they stay
// first-class for tests and for the kernel benchmark. The unqualified
// kernels parallelize with OpenMP above a size grain and fall back to the
// serial loops below it (or when built without OpenMP).

#include "drkit/support_vector.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

namespace drkit {

struct PairStats {
    Index min_dist;
    Index max_dist;
};

int kernel_threads();  // 1 without OpenMP

namespace serial {

// Min/max distance over distinct pairs of fam[idx]; requires |idx| >= 2.
PairStats pair_stats(const VectorFamily& fam, std::span<const std::size_t> idx);

// Min distance from fam[candidate] to fam[members]; INT64_MAX when empty.
Index min_distance_to(const VectorFamily& fam, std::size_t candidate, std::span<const std::size_t> members);

// Min distance from an outside candidate to every family member;
// INT64_MAX when the family is empty.
Index min_distance_to(const VectorFamily& fam, const SupportVector& candidate);

// First (row-major) pair (a[i], b[j]) whose distance differs from expected.
std::optional<std::pair<std::size_t, std::size_t>> find_cross_mismatch(const VectorFamily& fam,
                                                                       std::span<const std::size_t> a,
                                                                       std::span<const std::size_t> b,
                                                                       Index expected);

}  // namespace serial

PairStats pair_stats(const VectorFamily& fam, std::span<const std::size_t> idx);
Index min_distance_to(const VectorFamily& fam, std::size_t candidate, std::span<const std::size_t> members);
Index min_distance_to(const VectorFamily& fam, const SupportVector& candidate);
std::optional<std::pair<std::size_t, std::size_t>> find_cross_mismatch(const VectorFamily& fam,
                                                                       std::span<const std::size_t> a,
                                                                       std::span<const std::size_t> b,
                                                                       Index expected);

// Convenience: all indices 0..size-1.
std::vector<std::size_t> all_indices(const VectorFamily& fam);

}  // namespace drkit
