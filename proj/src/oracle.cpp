#include "drkit/oracle.hpp"

#include "drkit/combinatorics.hpp"
#include "drkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace drkit {

namespace {

struct Search {
    const Rational& bound;
    std::vector<std::vector<Index>> dist;  // dense pair distances
    std::size_t m;

    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    std::uint64_t explored = 0;
    std::uint64_t pruned = 0;

    // Depth-first, include-before-exclude: subsets of equal size are
    // visited in lexicographic order, so the first strict improvement is
    // the lexicographically smallest maximum.
    void run(std::size_t next, Index cur_min, Index cur_max) {
        if (current.size() > best.size()) best = current;
        for (std::size_t cand = next; cand < m; ++cand) {
            if (current.size() + (m - cand) <= best.size()) return;  // cannot beat best anymore
            Index lo = cur_min, hi = cur_max;
            for (std::size_t member : current) {
                Index d = dist[member][cand];
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
            ++explored;
            if (current.size() >= 1 && Rational(hi) > bound * lo) {
                ++pruned;  // every superset violates too
                continue;
            }
            current.push_back(cand);
            run(cand + 1, lo, hi);
            current.pop_back();
        }
    }
};

}  // namespace

OracleResult best_subset_bruteforce(const VectorFamily& fam, const Rational& C, Index cap) {
    const auto m = static_cast<Index>(fam.size());
    if (m > cap)
        throw LimitError("family of " + std::to_string(m) + " vectors exceeds the brute-force cap " +
                         std::to_string(cap));
    if (m == 0) throw std::invalid_argument("oracle needs a non-empty family");
    if (!(C >= 1)) throw std::invalid_argument("oracle bound C must be >= 1");

    Search search{C, {}, fam.size(), {}, {}, 0, 0};
    search.dist.assign(fam.size(), std::vector<Index>(fam.size(), 0));
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            search.dist[i][j] = search.dist[j][i] = detail::distance_unchecked(fam[i], fam[j]);

    search.run(0, std::numeric_limits<Index>::max(), 0);

    OracleResult result;
    result.subset = search.best;
    result.size = static_cast<std::int64_t>(search.best.size());
    result.ratio = result.size >= 2 ? distance_ratio(fam, search.best) : Rational(1);
    result.explored = search.explored;
    result.pruned = search.pruned;
    return result;
}

AlphaProbe empirical_alpha(const VectorFamily& fam, const Rational& C, Index cap) {
    if (fam.size() < 2) throw std::invalid_argument("empirical exponent needs at least two vectors");
    OracleResult r = best_subset_bruteforce(fam, C, cap);
    AlphaProbe probe;
    probe.oracle_size = r.size;
    probe.exponent = std::log(static_cast<double>(r.size)) / std::log(static_cast<double>(fam.size()));
    return probe;
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

VectorFamily random_family(Index n, Index p, Index m, std::uint64_t seed) {
    if (n < 1 || p < 0 || p > n || m < 0) throw std::invalid_argument("random_family: need 0 <= p <= n, m >= 0");
    if (BigInt(m) > binomial(n, p))
        throw std::invalid_argument("random_family: " + std::to_string(m) + " distinct supports do not exist for n=" +
                                    std::to_string(n) + " p=" + std::to_string(p));

    VectorFamily fam(n, p);
    std::uint64_t state = seed;
    std::vector<Index> ids(static_cast<std::size_t>(n));
    while (static_cast<Index>(fam.size()) < m) {
        std::iota(ids.begin(), ids.end(), Index{1});
        for (Index i = 0; i < p; ++i) {
            std::uint64_t j = static_cast<std::uint64_t>(i) +
                              splitmix64_next(state) % static_cast<std::uint64_t>(n - i);
            std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
        }
        std::vector<Index> support(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(p));
        std::sort(support.begin(), support.end());
        SupportVector v = SupportVector::make(n, std::move(support));
        if (fam.contains(v)) continue;  // redraw, consuming more of the stream
        fam.push_back(std::move(v));
    }
    return fam;
}

}  // namespace drkit
