#pragma once

#include "drkit/kernels.hpp"
#include "drkit/rational.hpp"
#include "drkit/support_vector.hpp"

namespace drkit {

struct DistanceStats {
    Index min_dist;      // over distinct pairs
    Index max_dist;      // over all pairs
    Rational ratio;      // max/min, exact
};

// Requires at least two vectors.
DistanceStats distance_stats(const VectorFamily& fam);

// Singleton families have ratio 1 by convention (least value compatible
// with every admissible bound); empty families are an error.
Rational distance_ratio(const VectorFamily& fam);

// Ratio over a subset given by indices into fam; same conventions.
Rational distance_ratio(const VectorFamily& fam, std::span<const std::size_t> idx);

}  // namespace drkit
