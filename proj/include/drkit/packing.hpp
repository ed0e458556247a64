#pragma once

// Greedy minimum-distance packing over the slice of all weight-p vectors.
// With the slice threshold rounded to (the even round-up of) ceil((p+1)/4)
// the packing keeps its distance ratio below 8, the positive counterpart
// to the recursive counterexample families.

#include "drkit/rational.hpp"
#include "drkit/support_vector.hpp"

#include <cstdint>
#include <optional>

namespace drkit {

// Lexicographic stream over all C(n, p) supports; no materialization.
class SliceStream {
public:
    SliceStream(Index n, Index p);
    std::optional<SupportVector> next();

private:
    Index n_;
    Index p_;
    std::vector<Index> comb_;
    bool done_ = false;
    bool first_ = true;
};

struct PackingParams {
    Index n = 0;
    Index p = 0;
    Index d_min = 2;  // odd values round up: equal-weight distances are even

    enum class Mode { full_lex, seeded_sample };
    Mode mode = Mode::full_lex;
    std::uint64_t seed = 0;
    Index sample_count = 0;
};

// Scans the enumeration in order and admits a vector iff it is at distance
// >= d_min from everything admitted so far; maximal w.r.t. the scanned
// stream. The result has min distance >= d_min and ratio <= 2p/d_min.
VectorFamily greedy_packing(const PackingParams& params);

}  // namespace drkit
