#pragma once

// Recursive block families: parameter solving, construction, and the
// structural / exhaustive verifiers for the bounded-subset property.
//
// A level-i block is a family of q^i weight-p vectors of diameter
// 2p/a^(t-i), split into q level-(i-1) blocks with every cross pair at
// exactly that diameter. Built recursively between frames (S, T): all
// vectors are 1 on S and 0 outside T.

#include "drkit/distance.hpp"
#include "drkit/errors.hpp"
#include "drkit/rational.hpp"
#include "drkit/support_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drkit {

struct CisParams {
    Index t = 0;
    Index a = 0;
    Index p = 0;
    Index q = 0;
    Index n = 0;
    Rational alpha;
    Rational C;
    Rational lambda;
};

struct Limits {
    Index max_family_size = 100000;
    Index max_dimension = 1000000;
};

// The four admissibility conditions, checked exactly:
//   1. 1/t < alpha and a > C
//   2. a^t divides p
//   3. q^t >= lambda^p        (cross-multiplied big-integer comparison)
//   4. n >= p + p(q-1) * sum_{j=1..t} (q/a)^(t-j)
// Returns a description per violated condition; empty means admissible.
std::vector<std::string> check_conditions(const CisParams& params);

struct ParamOverrides {
    std::optional<Index> t, a, p, q, n;
};

// Minimal admissible tuple under the fixed rule: t = floor(1/alpha)+1,
// a = floor(C)+1, p = a^t, q minimal with q^t >= lambda^p, n minimal per
// condition 4. Throws LimitError when q^t or n exceeds limits -- the
// expected outcome for realistic inputs. Overridden components replace
// the rule and the final tuple is re-validated against conditions 1-4
// (std::invalid_argument on violation).
CisParams solve_params(const Rational& alpha, const Rational& C, const Rational& lambda, const Limits& limits,
                       const ParamOverrides& overrides = {});

// Frame budget f_i: a level-i block fits between (S, T) with
// |S| = p - p/a^(t-i) whenever |T| >= f_i. Closed form
// f_i = p + p(q-1) * sum_{j=1..i} q^(i-j)/a^(t-j), with f_0 = p and
// f_i = q f_{i-1} - (q-1)(p - p/a^(t-i)).
Rational capacity(Index i, const CisParams& params);

struct RecursionFrame {
    Index level = 0;
    std::vector<Index> shared;  // S: coordinates forced to 1
    std::vector<Index> ground;  // T: coordinates allowed to be 1
};

struct BlockTree {
    Index level = 0;
    std::optional<RecursionFrame> frame;  // absent on trees loaded from disk
    std::vector<BlockTree> children;      // q children, or empty at level 0
    std::int64_t leaf_index = -1;         // 0-based family index at level 0

    bool is_leaf() const { return children.empty(); }
    // 0-based family indices spanned by this node, in leaf order.
    std::vector<std::size_t> span() const;
};

// Deterministic choice rules: T\S splits into q consecutive ascending runs
// (first |T\S| mod q runs one larger); each child's extra shared set is the
// lowest-indexed prefix of its run; a leaf fills up with the lowest-indexed
// free coordinates. Throws LimitError on a frame budget violation and
// std::invalid_argument if two leaves coincide.
std::pair<VectorFamily, BlockTree> build_cis(const CisParams& params);

struct Violation {
    std::string path;    // "root", "root/2", ... (1-based child steps)
    std::string clause;
    std::string detail;
};

// Checks every node at level i >= 1: q^i span, q children, span max
// distance exactly 2p/a^(t-i), all cross-child pairs exactly 2p/a^(t-i).
// Structural family/tree mismatches throw; clause failures are reported.
std::vector<Violation> verify_cis(const VectorFamily& fam, const BlockTree& tree, const CisParams& params);

enum class CounterexampleMode { structural, exhaustive };

// Exhaustive: every (q+1)-subset has ratio >= a (enough, by monotonicity
// of the ratio under supersets, for all larger subsets). Errors out above
// subset_cap and directs to structural mode. Structural: per-node distance
// bounds that force the pigeonhole ratio a on any q+1 vectors; ignores no
// clause of verify_cis it depends on. Exhaustive mode does not use the tree.
std::vector<Violation> verify_counterexample(const VectorFamily& fam, const BlockTree& tree,
                                             const CisParams& params, CounterexampleMode mode,
                                             Index subset_cap = 2000000);

}  // namespace drkit
