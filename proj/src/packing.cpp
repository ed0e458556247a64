#include "drkit/packing.hpp"

#include "drkit/combinatorics.hpp"
#include "drkit/kernels.hpp"
#include "drkit/oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace drkit {

SliceStream::SliceStream(Index n, Index p) : n_(n), p_(p), comb_(static_cast<std::size_t>(p)) {
    if (n < 1 || p < 0 || p > n) throw std::invalid_argument("slice needs 0 <= p <= n");
    std::iota(comb_.begin(), comb_.end(), Index{1});
}

std::optional<SupportVector> SliceStream::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
    } else if (!next_combination(comb_, n_)) {
        done_ = true;
        return std::nullopt;
    }
    return SupportVector::make(n_, comb_);
}

VectorFamily greedy_packing(const PackingParams& params) {
    if (params.n < 1 || params.p < 0 || params.p > params.n)
        throw std::invalid_argument("packing needs 0 <= p <= n");
    if (params.d_min < 1) throw std::invalid_argument("packing needs a positive target distance");
    const Index d_min = params.d_min % 2 == 0 ? params.d_min : params.d_min + 1;

    VectorFamily admitted(params.n, params.p);
    auto consider = [&](SupportVector v) {
        // d_min <= 2 admits every distinct candidate (equal-weight parity floor).
        if (min_distance_to(admitted, v) >= d_min) admitted.push_back(std::move(v));
    };

    if (params.mode == PackingParams::Mode::full_lex) {
        SliceStream stream(params.n, params.p);
        while (auto v = stream.next()) consider(std::move(*v));
    } else {
        if (params.sample_count < 0) throw std::invalid_argument("sample count must be non-negative");
        VectorFamily candidates = random_family(params.n, params.p, params.sample_count, params.seed);
        for (const auto& v : candidates) consider(v);
    }
    return admitted;
}

}  // namespace drkit
