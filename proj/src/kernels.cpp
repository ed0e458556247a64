#include "drkit/kernels.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drkit {

namespace {
// Below this many distance evaluations the omp fork/join costs more than
// the scan itself.
constexpr std::size_t kParallelGrain = 4096;
}  // namespace

int kernel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

PairStats pair_stats(const VectorFamily& fam, std::span<const std::size_t> idx) {
    if (idx.size() < 2) throw std::invalid_argument("pair_stats needs at least two vectors");
    Index lo = std::numeric_limits<Index>::max();
    Index hi = 0;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            Index d = detail::distance_unchecked(fam[idx[i]], fam[idx[j]]);
            if (d < lo) lo = d;
            if (d > hi) hi = d;
        }
    }
    return {lo, hi};
}

Index min_distance_to(const VectorFamily& fam, std::size_t candidate, std::span<const std::size_t> members) {
    Index lo = std::numeric_limits<Index>::max();
    for (std::size_t m : members) {
        Index d = detail::distance_unchecked(fam[candidate], fam[m]);
        if (d < lo) lo = d;
    }
    return lo;
}

Index min_distance_to(const VectorFamily& fam, const SupportVector& candidate) {
    Index lo = std::numeric_limits<Index>::max();
    for (const auto& member : fam) {
        Index d = detail::distance_unchecked(candidate, member);
        if (d < lo) lo = d;
    }
    return lo;
}

std::optional<std::pair<std::size_t, std::size_t>> find_cross_mismatch(const VectorFamily& fam,
                                                                       std::span<const std::size_t> a,
                                                                       std::span<const std::size_t> b,
                                                                       Index expected) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (detail::distance_unchecked(fam[a[i]], fam[b[j]]) != expected) return std::make_pair(a[i], b[j]);
    return std::nullopt;
}

}  // namespace serial

PairStats pair_stats(const VectorFamily& fam, std::span<const std::size_t> idx) {
    if (idx.size() < 2) throw std::invalid_argument("pair_stats needs at least two vectors");
    const std::size_t m = idx.size();
    if (m * (m - 1) / 2 < kParallelGrain) return serial::pair_stats(fam, idx);

    Index lo = std::numeric_limits<Index>::max();
    Index hi = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(min : lo) reduction(max : hi)
#endif
    for (std::size_t i = 0; i < m - 1; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Index d = detail::distance_unchecked(fam[idx[i]], fam[idx[j]]);
            if (d < lo) lo = d;
            if (d > hi) hi = d;
        }
    }
    return {lo, hi};
}

Index min_distance_to(const VectorFamily& fam, std::size_t candidate, std::span<const std::size_t> members) {
    if (members.size() < kParallelGrain) return serial::min_distance_to(fam, candidate, members);

    Index lo = std::numeric_limits<Index>::max();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : lo)
#endif
    for (std::size_t k = 0; k < members.size(); ++k) {
        Index d = detail::distance_unchecked(fam[candidate], fam[members[k]]);
        if (d < lo) lo = d;
    }
    return lo;
}

Index min_distance_to(const VectorFamily& fam, const SupportVector& candidate) {
    if (fam.size() < kParallelGrain) return serial::min_distance_to(fam, candidate);

    Index lo = std::numeric_limits<Index>::max();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : lo)
#endif
    for (std::size_t k = 0; k < fam.size(); ++k) {
        Index d = detail::distance_unchecked(candidate, fam[k]);
        if (d < lo) lo = d;
    }
    return lo;
}

std::optional<std::pair<std::size_t, std::size_t>> find_cross_mismatch(const VectorFamily& fam,
                                                                       std::span<const std::size_t> a,
                                                                       std::span<const std::size_t> b,
                                                                       Index expected) {
    if (a.size() * b.size() < kParallelGrain) return serial::find_cross_mismatch(fam, a, b, expected);

    const std::size_t total = a.size() * b.size();
    std::size_t first = total;  // row-major rank of first mismatch
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : first)
#endif
    for (std::size_t r = 0; r < total; ++r) {
        std::size_t i = r / b.size(), j = r % b.size();
        if (detail::distance_unchecked(fam[a[i]], fam[b[j]]) != expected && r < first) first = r;
    }
    if (first == total) return std::nullopt;
    return std::make_pair(a[first / b.size()], b[first % b.size()]);
}

std::vector<std::size_t> all_indices(const VectorFamily& fam) {
    std::vector<std::size_t> idx(fam.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

}  // namespace drkit
