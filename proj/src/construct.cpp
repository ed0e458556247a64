#include "drkit/construct.hpp"

#include "drkit/combinatorics.hpp"
#include "drkit/kernels.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace drkit {

namespace {

// Representation guard for exact powers; keeps pathological library inputs
// from allocating gigabytes instead of failing cleanly.
constexpr std::uint64_t kMaxPowBits = std::uint64_t{1} << 27;

void guard_pow_bits(const BigInt& base, std::uint64_t exp) {
    if (base <= 0) throw std::domain_error("power guard expects a positive base");
    std::uint64_t bits = boost::multiprecision::msb(base) + 1;
    if (bits * exp > kMaxPowBits)
        throw std::domain_error("exact power " + base.str() + "^" + std::to_string(exp) +
                                " too large to evaluate");
}

// Largest r >= 1 with r^t <= m (m >= 1, t >= 1).
BigInt iroot_floor(const BigInt& m, Index t) {
    BigInt lo = 1, hi = BigInt(1) << (boost::multiprecision::msb(m) / static_cast<unsigned>(t) + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (big_pow(mid, t) <= m)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Three-way compare of q^t against lambda^p by cross-multiplication,
// with a Bernoulli lower bound (lambda^p >= 1 + p(lambda-1)) as the fast
// path for astronomically large right-hand sides.
int compare_qt_vs_lambda_p(const BigInt& q, Index t, const Rational& lambda, Index p) {
    guard_pow_bits(q, t);
    BigInt qt = big_pow(q, t);
    const BigInt& u = numerator(lambda);
    const BigInt& d = denominator(lambda);
    if (qt * d < d + BigInt(p) * (u - d)) return -1;  // certified: below the Bernoulli floor
    guard_pow_bits(u, p);
    BigInt lhs = qt * big_pow(d, p);
    BigInt rhs = big_pow(u, p);
    if (lhs < rhs) return -1;
    if (lhs == rhs) return 0;
    return 1;
}

std::string describe(const CisParams& pr) {
    return "t=" + std::to_string(pr.t) + " a=" + std::to_string(pr.a) + " p=" + std::to_string(pr.p) +
           " q=" + std::to_string(pr.q) + " n=" + std::to_string(pr.n);
}

}  // namespace

std::vector<std::string> check_conditions(const CisParams& pr) {
    std::vector<std::string> bad;
    if (pr.t <= 0 || pr.a <= 0 || pr.p <= 0 || pr.q <= 0 || pr.n <= 0) {
        bad.push_back("t, a, p, q, n must all be positive (" + describe(pr) + ")");
        return bad;
    }
    if (!(pr.alpha > 0 && pr.alpha <= 1)) bad.push_back("alpha must lie in (0, 1], got " + format_rational(pr.alpha));
    if (!(pr.C >= 1)) bad.push_back("C must be >= 1, got " + format_rational(pr.C));
    if (!(pr.lambda > 1)) bad.push_back("lambda must exceed 1, got " + format_rational(pr.lambda));
    if (!bad.empty()) return bad;

    if (!(Rational(1, pr.t) < pr.alpha))
        bad.push_back("condition 1: 1/t < alpha fails (1/" + std::to_string(pr.t) + " vs " +
                      format_rational(pr.alpha) + ")");
    if (!(Rational(pr.a) > pr.C))
        bad.push_back("condition 1: a > C fails (" + std::to_string(pr.a) + " vs " + format_rational(pr.C) + ")");

    bool divisible;
    if (pr.a == 1) {
        divisible = true;
    } else if (pr.t > 63) {
        divisible = false;  // a^t >= 2^64 > p
    } else {
        divisible = BigInt(pr.p) % big_pow(BigInt(pr.a), pr.t) == 0;
    }
    if (!divisible)
        bad.push_back("condition 2: p = " + std::to_string(pr.p) + " is not a multiple of a^t = " +
                      std::to_string(pr.a) + "^" + std::to_string(pr.t));

    if (compare_qt_vs_lambda_p(BigInt(pr.q), pr.t, pr.lambda, pr.p) < 0)
        bad.push_back("condition 3: q^t >= lambda^p fails (q=" + std::to_string(pr.q) + ", t=" +
                      std::to_string(pr.t) + ", lambda=" + format_rational(pr.lambda) + ", p=" +
                      std::to_string(pr.p) + ")");

    Rational ft = capacity(pr.t, pr);
    if (Rational(pr.n) < ft)
        bad.push_back("condition 4: n >= p + p(q-1)*sum fails (" + std::to_string(pr.n) + " < " +
                      format_rational(ft) + ")");
    return bad;
}

Rational capacity(Index i, const CisParams& pr) {
    if (i < 0 || i > pr.t) throw std::out_of_range("capacity level must lie in [0, t]");
    if (i == 0) return Rational(pr.p);
    // f_i = p + p(q-1)/a^(t-i) * sum_{k=0..i-1} (q/a)^k, geometric closed form
    Rational geo;
    if (pr.q == pr.a) {
        geo = Rational(i);
    } else {
        guard_pow_bits(BigInt(std::max(pr.q, pr.a)), static_cast<std::uint64_t>(i));
        Rational r(BigInt(pr.q), BigInt(pr.a));
        geo = (rat_pow(r, static_cast<std::uint64_t>(i)) - 1) / (r - 1);
    }
    Rational scale(BigInt(pr.p) * (pr.q - 1), big_pow(BigInt(pr.a), pr.t - i));
    return Rational(pr.p) + scale * geo;
}

CisParams solve_params(const Rational& alpha, const Rational& C, const Rational& lambda, const Limits& limits,
                       const ParamOverrides& ov) {
    if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in (0, 1]");
    if (!(C >= 1)) throw std::invalid_argument("C must be >= 1");
    if (!(lambda > 1)) throw std::invalid_argument("lambda must exceed 1");
    if (limits.max_family_size < 1 || limits.max_dimension < 1)
        throw std::invalid_argument("limits must be positive");
    for (auto [name, value] : {std::pair{"t", ov.t}, {"a", ov.a}, {"p", ov.p}, {"q", ov.q}, {"n", ov.n}})
        if (value && *value < 1) throw std::invalid_argument(std::string("override ") + name + " must be positive");

    const BigInt M(limits.max_family_size);
    const BigInt D(limits.max_dimension);

    BigInt t_big = ov.t ? BigInt(*ov.t) : rat_floor(Rational(1) / alpha) + 1;
    // Unless overridden below 2, q is at least 2 (lambda > 1 rules out
    // q = 1), so q^t >= 2^t; that certifies astronomical t immediately.
    if ((!ov.q || *ov.q >= 2) && t_big > boost::multiprecision::msb(M))
        throw LimitError("parameters exceed configured limits: q^t >= 2^t > max_family_size = " + M.str() +
                         " (t = " + t_big.str() + ", q >= 2)");
    const Index t = to_int64(t_big);

    BigInt a_big = ov.a ? BigInt(*ov.a) : rat_floor(C) + 1;
    BigInt p_big;
    if (ov.p) {
        p_big = *ov.p;
    } else {
        p_big = 1;
        for (Index i = 0; i < t; ++i) {
            p_big *= a_big;
            if (p_big > D)
                throw LimitError("parameters exceed configured limits: n >= p = a^t >= " + p_big.str() +
                                 " > max_dimension = " + D.str() + " (a = " + a_big.str() + ", t = " +
                                 std::to_string(t) + ")");
        }
    }
    if (p_big > D)
        throw LimitError("parameters exceed configured limits: n >= p = " + p_big.str() +
                         " > max_dimension = " + D.str());
    const Index a = to_int64(a_big);
    const Index p = to_int64(p_big);

    Index q;
    if (ov.q) {
        q = *ov.q;
        BigInt qt = 1;
        for (Index i = 0; q >= 2 && i < t && qt <= M; ++i) qt *= q;
        if (qt > M)
            throw LimitError("parameters exceed configured limits: q^t > max_family_size = " + M.str() +
                             " (q = " + std::to_string(q) + ", t = " + std::to_string(t) + ")");
    } else {
        const BigInt& u = numerator(lambda);
        const BigInt& d = denominator(lambda);
        // Bernoulli floor: lambda^p >= 1 + p(lambda-1); if that already
        // beats the limit there is no point computing lambda^p exactly.
        if (d + p_big * (u - d) > M * d)
            throw LimitError("parameters exceed configured limits: q^t >= lambda^p >= 1 + p(lambda-1) = " +
                             format_rational(Rational(d + p_big * (u - d), d)) + " > max_family_size = " +
                             M.str());

        guard_pow_bits(u, p);
        const BigInt u_p = big_pow(u, p);
        const BigInt d_p = big_pow(d, p);

        BigInt q_cap = iroot_floor(M, t);  // largest q with q^t <= max_family_size
        if (big_pow(q_cap, t) * d_p < u_p) {
            BigInt hi = q_cap + 1;
            while (big_pow(hi, t) * d_p < u_p) hi *= 2;
            BigInt lo = q_cap + 1;
            while (lo < hi) {
                BigInt mid = (lo + hi) / 2;
                if (big_pow(mid, t) * d_p >= u_p)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            throw LimitError("parameters exceed configured limits: q = " + lo.str() + ", q^t = " +
                             big_pow(lo, t).str() + " > max_family_size = " + M.str());
        }
        BigInt lo = 2, hi = q_cap;
        while (lo < hi) {
            BigInt mid = (lo + hi) / 2;
            if (big_pow(mid, t) * d_p >= u_p)
                hi = mid;
            else
                lo = mid + 1;
        }
        q = to_int64(lo);
    }

    CisParams pr{t, a, p, q, 0, alpha, C, lambda};
    BigInt n_big = ov.n ? BigInt(*ov.n) : rat_ceil(capacity(t, pr));
    if (n_big > D)
        throw LimitError("parameters exceed configured limits: n = " + n_big.str() + " > max_dimension = " +
                         D.str());
    pr.n = to_int64(n_big);

    auto bad = check_conditions(pr);
    if (!bad.empty()) {
        if (ov.t || ov.a || ov.p || ov.q || ov.n) {
            std::string joined;
            for (const auto& b : bad) joined += (joined.empty() ? "" : "; ") + b;
            throw std::invalid_argument("overridden parameters are inadmissible: " + joined);
        }
        throw std::logic_error("solver produced inadmissible parameters: " + bad.front());
    }
    return pr;
}

std::vector<std::size_t> BlockTree::span() const {
    std::vector<std::size_t> out;
    const auto walk = [&out](auto&& self, const BlockTree& node) -> void {
        if (node.is_leaf()) {
            if (node.leaf_index < 0) throw std::invalid_argument("leaf without a vector index");
            out.push_back(static_cast<std::size_t>(node.leaf_index));
            return;
        }
        for (const auto& child : node.children) self(self, child);
    };
    walk(walk, *this);
    return out;
}

namespace {

struct Builder {
    const CisParams& pr;
    VectorFamily family;
    std::vector<BigInt> a_pow;  // a^0 .. a^t

    explicit Builder(const CisParams& params)
        : pr(params), family(params.n, params.p), a_pow(static_cast<std::size_t>(params.t) + 1) {
        a_pow[0] = 1;
        for (Index i = 1; i <= pr.t; ++i)
            a_pow[static_cast<std::size_t>(i)] = a_pow[static_cast<std::size_t>(i - 1)] * pr.a;
    }

    Index p_over_a(Index e) const {  // p / a^e, exact by condition 2
        return to_int64(BigInt(pr.p) / a_pow[static_cast<std::size_t>(e)]);
    }

    BlockTree build(Index level, std::vector<Index> shared, std::vector<Index> ground) {
        BlockTree node;
        node.level = level;
        if (level == 0) {
            std::vector<Index> support = shared;
            const auto need = static_cast<std::size_t>(pr.p) - shared.size();
            std::size_t taken = 0;
            for (std::size_t gi = 0, si = 0; gi < ground.size() && taken < need; ++gi) {
                while (si < shared.size() && shared[si] < ground[gi]) ++si;
                if (si < shared.size() && shared[si] == ground[gi]) continue;
                support.push_back(ground[gi]);
                ++taken;
            }
            if (taken < need) throw CapacityError("capacity violated at level 0");
            std::sort(support.begin(), support.end());
            node.leaf_index = static_cast<std::int64_t>(family.size());
            family.push_back(SupportVector::make(pr.n, support));
            node.frame = RecursionFrame{level, std::move(shared), std::move(ground)};
            return node;
        }

        std::vector<Index> free;  // T \ S, ascending
        std::set_difference(ground.begin(), ground.end(), shared.begin(), shared.end(), std::back_inserter(free));

        const auto qn = static_cast<std::size_t>(pr.q);
        const std::size_t base = free.size() / qn;
        const std::size_t rem = free.size() % qn;
        const Rational child_budget = capacity(level - 1, pr);
        const Index extra_shared = p_over_a(pr.t - level) - p_over_a(pr.t - level + 1);

        node.children.reserve(qn);
        std::size_t cursor = 0;
        for (std::size_t r = 0; r < qn; ++r) {
            const std::size_t run_len = base + (r < rem ? 1 : 0);
            std::vector<Index> run(free.begin() + static_cast<std::ptrdiff_t>(cursor),
                                   free.begin() + static_cast<std::ptrdiff_t>(cursor + run_len));
            cursor += run_len;
            if (Rational(BigInt(shared.size() + run.size())) < child_budget)
                throw CapacityError("capacity violated at level " + std::to_string(level));
            if (static_cast<std::size_t>(extra_shared) > run.size())
                throw CapacityError("capacity violated at level " + std::to_string(level));

            std::vector<Index> child_shared = shared;
            child_shared.insert(child_shared.end(), run.begin(), run.begin() + extra_shared);
            std::sort(child_shared.begin(), child_shared.end());
            std::vector<Index> child_ground = shared;
            child_ground.insert(child_ground.end(), run.begin(), run.end());
            std::sort(child_ground.begin(), child_ground.end());
            node.children.push_back(build(level - 1, std::move(child_shared), std::move(child_ground)));
        }
        node.frame = RecursionFrame{level, std::move(shared), std::move(ground)};
        return node;
    }
};

}  // namespace

std::pair<VectorFamily, BlockTree> build_cis(const CisParams& pr) {
    if (pr.t < 1) throw std::invalid_argument("construction needs t >= 1");
    if (pr.a < 1 || pr.p < 1 || pr.q < 1 || pr.n < 1)
        throw std::invalid_argument("construction needs positive a, p, q, n");
    if (pr.p > pr.n) throw std::invalid_argument("weight p may not exceed dimension n");
    if (pr.t > 63 && pr.a > 1) throw std::invalid_argument("a^t exceeds any representable weight");
    BigInt at = big_pow(BigInt(pr.a), pr.t);
    if (BigInt(pr.p) % at != 0) throw std::invalid_argument("construction needs a^t to divide p");
    if (Rational(pr.n) < capacity(pr.t, pr))
        throw CapacityError("capacity violated at level " + std::to_string(pr.t) + ": n < f_t");

    Builder builder(pr);
    std::vector<Index> ground(static_cast<std::size_t>(pr.n));
    std::iota(ground.begin(), ground.end(), Index{1});
    BlockTree root = builder.build(pr.t, {}, std::move(ground));
    return {std::move(builder.family), std::move(root)};
}

namespace {

Rational level_diameter(const CisParams& pr, Index level) {
    return Rational(BigInt(2) * pr.p, big_pow(BigInt(pr.a), pr.t - level));
}

void collect_leaves(const BlockTree& node, std::vector<std::int64_t>& leaves) {
    if (node.is_leaf()) {
        leaves.push_back(node.leaf_index);
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, leaves);
}

void require_spans_family(const VectorFamily& fam, const BlockTree& tree) {
    std::vector<std::int64_t> leaves;
    collect_leaves(tree, leaves);
    if (leaves.size() != fam.size())
        throw std::invalid_argument("tree/family mismatch: " + std::to_string(leaves.size()) + " leaves vs " +
                                    std::to_string(fam.size()) + " vectors");
    std::vector<bool> seen(fam.size(), false);
    for (std::int64_t ix : leaves) {
        if (ix < 0 || ix >= static_cast<std::int64_t>(fam.size()))
            throw std::invalid_argument("tree/family mismatch: leaf index " + std::to_string(ix + 1) +
                                        " out of range");
        if (seen[static_cast<std::size_t>(ix)])
            throw std::invalid_argument("tree/family mismatch: leaf index " + std::to_string(ix + 1) +
                                        " repeated");
        seen[static_cast<std::size_t>(ix)] = true;
    }
}

struct CisVerifier {
    const VectorFamily& fam;
    const CisParams& pr;
    std::vector<Violation> out;

    void visit(const BlockTree& node, const std::string& path) {
        if (node.level < 0 || node.level > pr.t) {
            out.push_back({path, "structure", "level " + std::to_string(node.level) + " outside [0, t]"});
            return;
        }
        if (node.level == 0) {
            if (!node.is_leaf()) out.push_back({path, "structure", "level-0 node is not a leaf"});
            return;
        }
        if (node.is_leaf()) {
            out.push_back({path, "structure", "leaf at level " + std::to_string(node.level)});
            return;
        }

        const Rational diameter = level_diameter(pr, node.level);
        const auto span = node.span();

        BigInt expected_span = big_pow(BigInt(pr.q), node.level);
        if (BigInt(span.size()) != expected_span)
            out.push_back({path, "span-size",
                           "spans " + std::to_string(span.size()) + " vectors, expected q^" +
                               std::to_string(node.level) + " = " + expected_span.str()});

        if (node.children.size() != static_cast<std::size_t>(pr.q))
            out.push_back({path, "children",
                           std::to_string(node.children.size()) + " children, expected q = " +
                               std::to_string(pr.q)});

        if (span.size() >= 2) {
            PairStats st = pair_stats(fam, span);
            if (Rational(st.max_dist) != diameter)
                out.push_back({path, "max-distance",
                               "max pairwise distance " + std::to_string(st.max_dist) + ", expected " +
                                   format_rational(diameter)});
        } else {
            out.push_back({path, "max-distance", "span too small for a pairwise maximum"});
        }

        std::vector<std::vector<std::size_t>> child_spans;
        child_spans.reserve(node.children.size());
        for (const auto& child : node.children) child_spans.push_back(child.span());

        const bool integral = denominator(diameter) == 1;
        const Index diameter_int = integral ? to_int64(numerator(diameter)) : -1;
        for (std::size_t r = 0; r + 1 < child_spans.size(); ++r) {
            for (std::size_t s = r + 1; s < child_spans.size(); ++s) {
                if (!integral) {
                    out.push_back({path, "cross-distance",
                                   "expected cross distance " + format_rational(diameter) + " is not an integer"});
                    continue;
                }
                auto mismatch = find_cross_mismatch(fam, child_spans[r], child_spans[s], diameter_int);
                if (mismatch)
                    out.push_back({path, "cross-distance",
                                   "vectors " + std::to_string(mismatch->first + 1) + " and " +
                                       std::to_string(mismatch->second + 1) + " are at distance " +
                                       std::to_string(detail::distance_unchecked(fam[mismatch->first],
                                                                                 fam[mismatch->second])) +
                                       ", expected " + std::to_string(diameter_int)});
            }
        }

        for (std::size_t r = 0; r < node.children.size(); ++r)
            visit(node.children[r], path + "/" + std::to_string(r + 1));
    }
};

}  // namespace

std::vector<Violation> verify_cis(const VectorFamily& fam, const BlockTree& tree, const CisParams& params) {
    require_spans_family(fam, tree);
    if (tree.level != params.t)
        throw std::invalid_argument("tree/params mismatch: root level " + std::to_string(tree.level) +
                                    " vs t = " + std::to_string(params.t));
    CisVerifier verifier{fam, params, {}};
    verifier.visit(tree, "root");
    return verifier.out;
}

namespace {

std::vector<Violation> verify_counterexample_exhaustive(const VectorFamily& fam, const CisParams& pr,
                                                        Index subset_cap) {
    std::vector<Violation> out;
    const Index m = static_cast<Index>(fam.size());
    const Index k = pr.q + 1;
    if (m < k) return out;  // no subset exceeds q vectors

    BigInt count = binomial(m, k);
    if (count > subset_cap)
        throw LimitError("exhaustive verification would scan " + count.str() + " subsets (cap " +
                         std::to_string(subset_cap) + "); use structural mode");
    const std::int64_t total = to_int64(count);

    // Unrank chunk starts, then walk successors serially inside each chunk;
    // report the lexicographically first violating subset.
    constexpr std::int64_t kChunk = 2048;
    const std::int64_t chunks = (total + kChunk - 1) / kChunk;
    std::int64_t first_bad = total;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
#endif
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * kChunk;
        const std::int64_t end = std::min(total, begin + kChunk);
        std::vector<Index> comb = unrank_combination(begin, m, k);
        for (std::int64_t rank = begin; rank < end; ++rank) {
            unsigned __int128 lo = ~static_cast<unsigned __int128>(0), hi = 0;
            for (std::size_t i = 0; i + 1 < comb.size(); ++i) {
                for (std::size_t j = i + 1; j < comb.size(); ++j) {
                    auto d = static_cast<unsigned __int128>(detail::distance_unchecked(
                        fam[static_cast<std::size_t>(comb[i] - 1)], fam[static_cast<std::size_t>(comb[j] - 1)]));
                    if (d < lo) lo = d;
                    if (d > hi) hi = d;
                }
            }
            // ratio >= a  <=>  max >= a * min
            if (hi < static_cast<unsigned __int128>(pr.a) * lo) {
                if (rank < first_bad) first_bad = rank;
                break;  // earlier ranks in this chunk already scanned
            }
            if (rank + 1 < end) next_combination(comb, m);
        }
    }

    if (first_bad < total) {
        std::vector<Index> comb = unrank_combination(first_bad, m, k);
        std::vector<std::size_t> idx;
        for (Index v : comb) idx.push_back(static_cast<std::size_t>(v - 1));
        std::string members;
        for (Index v : comb) members += (members.empty() ? "" : " ") + std::to_string(v);
        out.push_back({"family", "subset-ratio",
                       "subset {" + members + "} has ratio " + format_rational(distance_ratio(fam, idx)) +
                           " < a = " + std::to_string(pr.a)});
    }
    return out;
}

struct StructuralVerifier {
    const VectorFamily& fam;
    const CisParams& pr;
    std::vector<Violation> out;

    void visit(const BlockTree& node, const std::string& path) {
        if (node.level < 1) return;
        const Rational cross = level_diameter(pr, node.level);
        const Rational inner = level_diameter(pr, node.level - 1);

        // Pigeonhole needs: >q vectors put two in one child (min <= inner)
        // while any second child forces max = cross; cross/inner must be >= a.
        if (node.children.size() != static_cast<std::size_t>(pr.q))
            out.push_back({path, "children",
                           std::to_string(node.children.size()) + " children, expected q = " +
                               std::to_string(pr.q)});
        if (cross / inner < Rational(pr.a))
            out.push_back({path, "level-ratio",
                           "cross/within bound " + format_rational(cross / inner) + " < a = " +
                               std::to_string(pr.a)});

        std::vector<std::vector<std::size_t>> child_spans;
        for (const auto& child : node.children) child_spans.push_back(child.span());

        const bool integral = denominator(cross) == 1;
        const Index cross_int = integral ? to_int64(numerator(cross)) : -1;
        for (std::size_t r = 0; r + 1 < child_spans.size(); ++r)
            for (std::size_t s = r + 1; s < child_spans.size(); ++s) {
                if (!integral) {
                    out.push_back({path, "cross-distance",
                                   "expected cross distance " + format_rational(cross) + " is not an integer"});
                    continue;
                }
                if (auto mm = find_cross_mismatch(fam, child_spans[r], child_spans[s], cross_int))
                    out.push_back({path, "cross-distance",
                                   "vectors " + std::to_string(mm->first + 1) + " and " +
                                       std::to_string(mm->second + 1) + " break the exact cross distance " +
                                       std::to_string(cross_int)});
            }

        for (std::size_t r = 0; r < node.children.size(); ++r) {
            if (child_spans[r].size() >= 2) {
                PairStats st = pair_stats(fam, child_spans[r]);
                if (Rational(st.max_dist) > inner)
                    out.push_back({path + "/" + std::to_string(r + 1), "within-diameter",
                                   "child max distance " + std::to_string(st.max_dist) + " exceeds " +
                                       format_rational(inner)});
            }
            visit(node.children[r], path + "/" + std::to_string(r + 1));
        }
    }
};

}  // namespace

std::vector<Violation> verify_counterexample(const VectorFamily& fam, const BlockTree& tree,
                                             const CisParams& params, CounterexampleMode mode,
                                             Index subset_cap) {
    if (mode == CounterexampleMode::exhaustive) return verify_counterexample_exhaustive(fam, params, subset_cap);
    require_spans_family(fam, tree);
    StructuralVerifier verifier{fam, params, {}};
    verifier.visit(tree, "root");
    return verifier.out;
}

}  // namespace drkit
