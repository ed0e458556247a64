#include "drkit/distance.hpp"

#include <stdexcept>

namespace drkit {

DistanceStats distance_stats(const VectorFamily& fam) {
    if (fam.size() < 2) throw std::invalid_argument("ratio undefined below two vectors");
    auto idx = all_indices(fam);
    PairStats s = pair_stats(fam, idx);
    return {s.min_dist, s.max_dist, Rational(BigInt(s.max_dist), BigInt(s.min_dist))};
}

Rational distance_ratio(const VectorFamily& fam) {
    if (fam.empty()) throw std::invalid_argument("distance ratio of an empty family");
    if (fam.size() == 1) return Rational(1);
    return distance_stats(fam).ratio;
}

Rational distance_ratio(const VectorFamily& fam, std::span<const std::size_t> idx) {
    if (idx.empty()) throw std::invalid_argument("distance ratio of an empty subset");
    if (idx.size() == 1) return Rational(1);
    PairStats s = pair_stats(fam, idx);
    return Rational(BigInt(s.max_dist), BigInt(s.min_dist));
}

}  // namespace drkit
