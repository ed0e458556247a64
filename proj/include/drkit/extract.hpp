#pragma once

// Bounded-ratio subset extraction. For weight-p families and a ratio bound
// C > 2 the iterated greedy net either finds a dense ball early or ends
// with a well-separated net; either way the output K' satisfies
// dr(K') <= C and |K'|^t >= |K| with t the smallest integer such that
// (C/2)^t >= p/2. Thresholds are exact rationals; every decision is an
// integer-vs-rational comparison.

#include "drkit/distance.hpp"
#include "drkit/rational.hpp"
#include "drkit/support_vector.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace drkit {

struct DepthResult {
    Index t;
    Rational alpha;  // 1/t
};

// Smallest positive t with (C/2)^t >= p/2, by exact iteration (no
// logarithms anywhere near the decision); p <= C clamps to t = 1.
// Requires C > 2 and p >= 1.
DepthResult compute_depth(Index p, const Rational& C, Index max_depth = 1000000);

struct ExtractParams {
    Rational C;
    Index t = 1;
    Rational alpha;
    std::vector<Rational> thresholds;  // theta_i = C^i / 2^(i-1), i = 1..t-1

    static ExtractParams make(Index p, const Rational& C, Index max_depth = 1000000);
};

// Maximal threshold-separated subset, greedy in stored order: a vector is
// admitted iff its distance to every admitted vector is >= threshold.
VectorFamily greedy_separated(const VectorFamily& fam, const Rational& threshold);

// All vectors within radius of fam[center], preserving order.
VectorFamily ball(const VectorFamily& fam, std::size_t center, const Rational& radius);

struct ExtractionCertificate {
    enum class Kind { ball, net };
    Kind kind = Kind::net;
    Index level = 0;                        // i of the ball, or t for the net
    std::int64_t center = -1;               // 0-based input index (ball only)
    std::vector<std::int64_t> chain_sizes;  // |K_1|, ..., as far as built
    std::vector<std::size_t> subset;        // 0-based input indices of K'
    Rational C;
    Index t = 1;
};

std::pair<VectorFamily, ExtractionCertificate> extract_subset(const VectorFamily& fam, const Rational& C);

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

// Replays the deterministic chain for (fam, C), confirms chain sizes and
// branch, and independently re-checks dr(K') <= C and |K'|^t >= |K|.
CertificateCheck validate_certificate(const VectorFamily& fam, const Rational& C,
                                      const ExtractionCertificate& cert, const VectorFamily& subset);

}  // namespace drkit
