#include "drkit/extract.hpp"

#include "drkit/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace drkit {

namespace {

// d >= threshold, comparing an integer distance against an exact rational.
bool meets(Index d, const Rational& threshold) { return Rational(d) >= threshold; }

// size^t >= m without materializing size^t; size >= 1, m >= 1.
bool power_reaches(std::int64_t size, Index t, std::int64_t m) {
    if (size <= 0) return m <= 0;
    BigInt acc = 1;
    for (Index i = 0; i < t; ++i) {
        acc *= size;
        if (acc >= m) return true;  // remaining factors are >= 1
    }
    return acc >= m;
}

std::vector<std::size_t> greedy_indices(const VectorFamily& fam, const std::vector<std::size_t>& pool,
                                        const Rational& threshold) {
    std::vector<std::size_t> admitted;
    for (std::size_t cand : pool) {
        Index lo = min_distance_to(fam, cand, admitted);
        if (admitted.empty() || meets(lo, threshold)) admitted.push_back(cand);
    }
    return admitted;
}

std::vector<std::size_t> ball_indices(const VectorFamily& fam, const std::vector<std::size_t>& pool,
                                      std::size_t center, const Rational& radius) {
    std::vector<std::size_t> inside;
    for (std::size_t ix : pool)
        if (Rational(detail::distance_unchecked(fam[ix], fam[center])) <= radius) inside.push_back(ix);
    return inside;
}

VectorFamily take(const VectorFamily& fam, const std::vector<std::size_t>& idx) {
    VectorFamily out(fam.dimension(), fam.weight());
    for (std::size_t ix : idx) out.push_back(fam[ix]);
    return out;
}

}  // namespace

DepthResult compute_depth(Index p, const Rational& C, Index max_depth) {
    if (!(C > 2)) throw std::domain_error("extraction requires C > 2");
    if (p < 1) throw std::invalid_argument("weight p must be positive");
    const Rational half_c = C / 2;
    const Rational half_p(p, 2);
    Rational acc = half_c;
    Index t = 1;
    while (acc < half_p) {
        if (++t > max_depth)
            throw std::domain_error("extraction depth exceeds " + std::to_string(max_depth) +
                                    "; C is too close to 2 for this weight");
        acc *= half_c;
    }
    return {t, Rational(1, t)};
}

ExtractParams ExtractParams::make(Index p, const Rational& C, Index max_depth) {
    DepthResult depth = compute_depth(p, C, max_depth);
    ExtractParams params;
    params.C = C;
    params.t = depth.t;
    params.alpha = depth.alpha;
    for (Index i = 1; i < depth.t; ++i)
        params.thresholds.push_back(rat_pow(C, static_cast<std::uint64_t>(i)) /
                                    big_pow(BigInt(2), static_cast<std::uint64_t>(i - 1)));
    return params;
}

VectorFamily greedy_separated(const VectorFamily& fam, const Rational& threshold) {
    if (!(threshold > 0)) throw std::invalid_argument("separation threshold must be positive");
    return take(fam, greedy_indices(fam, all_indices(fam), threshold));
}

VectorFamily ball(const VectorFamily& fam, std::size_t center, const Rational& radius) {
    if (center >= fam.size()) throw std::out_of_range("ball center index out of range");
    return take(fam, ball_indices(fam, all_indices(fam), center, radius));
}

std::pair<VectorFamily, ExtractionCertificate> extract_subset(const VectorFamily& fam, const Rational& C) {
    if (fam.empty()) throw std::invalid_argument("cannot extract from an empty family");
    const auto m = static_cast<std::int64_t>(fam.size());

    ExtractParams params = ExtractParams::make(fam.weight(), C);
    ExtractionCertificate cert;
    cert.C = C;
    cert.t = params.t;

    std::vector<std::size_t> chain = all_indices(fam);
    cert.chain_sizes.push_back(m);

    for (Index i = 1; i < params.t; ++i) {
        const Rational& theta = params.thresholds[static_cast<std::size_t>(i - 1)];
        std::vector<std::size_t> net = greedy_indices(fam, chain, theta);
        cert.chain_sizes.push_back(static_cast<std::int64_t>(net.size()));
        for (std::size_t center : net) {
            std::vector<std::size_t> inside = ball_indices(fam, chain, center, theta);
            if (power_reaches(static_cast<std::int64_t>(inside.size()), params.t, m)) {
                cert.kind = ExtractionCertificate::Kind::ball;
                cert.level = i;
                cert.center = static_cast<std::int64_t>(center);
                cert.subset = inside;
                return {take(fam, inside), std::move(cert)};
            }
        }
        chain = std::move(net);
    }

    cert.kind = ExtractionCertificate::Kind::net;
    cert.level = params.t;
    cert.subset = chain;
    return {take(fam, chain), std::move(cert)};
}

CertificateCheck validate_certificate(const VectorFamily& fam, const Rational& C,
                                      const ExtractionCertificate& cert, const VectorFamily& subset) {
    CertificateCheck check;
    auto flag = [&check](std::string msg) {
        check.ok = false;
        check.problems.push_back(std::move(msg));
    };

    ExtractionCertificate replayed;
    try {
        replayed = extract_subset(fam, C).second;
    } catch (const std::exception& e) {
        flag(std::string("replay failed: ") + e.what());
        return check;
    }

    if (cert.C != C) flag("certificate C " + format_rational(cert.C) + " differs from queried " + format_rational(C));
    if (cert.t != replayed.t)
        flag("depth t mismatch: certificate " + std::to_string(cert.t) + ", replay " + std::to_string(replayed.t));
    if (cert.chain_sizes != replayed.chain_sizes) flag("chain sizes do not match the deterministic replay");
    if (cert.kind != replayed.kind)
        flag(std::string("branch mismatch: certificate is ") +
             (cert.kind == ExtractionCertificate::Kind::ball ? "ball" : "net") + ", replay is " +
             (replayed.kind == ExtractionCertificate::Kind::ball ? "ball" : "net"));
    if (cert.level != replayed.level)
        flag("level mismatch: certificate " + std::to_string(cert.level) + ", replay " +
             std::to_string(replayed.level));
    if (cert.kind == ExtractionCertificate::Kind::ball && cert.center != replayed.center)
        flag("ball center mismatch: certificate " + std::to_string(cert.center + 1) + ", replay " +
             std::to_string(replayed.center + 1));
    if (cert.subset != replayed.subset) flag("certified subset does not match the deterministic replay");

    if (subset.size() != cert.subset.size()) {
        flag("subset family size " + std::to_string(subset.size()) + " differs from certificate (" +
             std::to_string(cert.subset.size()) + ")");
    } else {
        for (std::size_t k = 0; k < cert.subset.size(); ++k) {
            std::size_t ix = cert.subset[k];
            if (ix >= fam.size()) {
                flag("certificate index " + std::to_string(ix + 1) + " out of range");
                break;
            }
            if (!(subset[k] == fam[ix])) {
                flag("subset vector " + std::to_string(k + 1) + " differs from input vector " +
                     std::to_string(ix + 1));
                break;
            }
        }
    }

    // Independent guarantees, straight from the definitions.
    if (!subset.empty()) {
        Rational ratio = distance_ratio(subset);
        if (!(ratio <= C)) flag("distance ratio " + format_rational(ratio) + " exceeds C = " + format_rational(C));
        if (!power_reaches(static_cast<std::int64_t>(subset.size()), cert.t,
                           static_cast<std::int64_t>(fam.size())))
            flag("size guarantee fails: " + std::to_string(subset.size()) + "^" + std::to_string(cert.t) +
                 " < " + std::to_string(fam.size()));
    } else {
        flag("empty subset");
    }

    // Net subsets must be pairwise separated by the last threshold.
    if (cert.kind == ExtractionCertificate::Kind::net && cert.t >= 2 && subset.size() >= 2) {
        ExtractParams params = ExtractParams::make(fam.weight(), C);
        const Rational& last = params.thresholds.back();
        auto idx = all_indices(subset);
        PairStats st = pair_stats(subset, idx);
        if (Rational(st.min_dist) < last)
            flag("net subset has a pair at distance " + std::to_string(st.min_dist) +
                 " below the final threshold " + format_rational(last));
    }

    return check;
}

}  // namespace drkit
