#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drkit/construct.hpp"
#include "drkit/io.hpp"
#include "drkit/oracle.hpp"

#include <algorithm>

using namespace drkit;

namespace {

SupportVector sv(Index n, std::vector<Index> support) { return SupportVector::make(n, std::move(support)); }

CisParams a1_params() {
    return solve_params(Rational(3, 5), Rational(3, 2), Rational(11, 10), Limits{});
}

CisParams a2_params() {
    return solve_params(Rational(2, 5), Rational(3, 2), Rational(11, 10), Limits{});
}

bool has_violation(const std::vector<Violation>& vs, const std::string& path, const std::string& clause) {
    return std::any_of(vs.begin(), vs.end(),
                       [&](const Violation& v) { return v.path == path && v.clause == clause; });
}

}  // namespace

TEST_CASE("solve_params resolves the two reference tuples") {
    CisParams p1 = a1_params();
    CHECK(p1.t == 2);
    CHECK(p1.a == 2);
    CHECK(p1.p == 4);
    CHECK(p1.q == 2);
    CHECK(p1.n == 12);

    CisParams p2 = a2_params();
    CHECK(p2.t == 3);
    CHECK(p2.a == 2);
    CHECK(p2.p == 8);
    CHECK(p2.q == 2);
    CHECK(p2.n == 32);
}

TEST_CASE("solve_params boundary inputs alpha=1, C=1") {
    CisParams pr = solve_params(Rational(1), Rational(1), Rational(11, 10), Limits{});
    CHECK(pr.t == 2);  // 1/2 < 1
    CHECK(pr.a == 2);  // 2 > 1
    CHECK(pr.p == 4);
    CHECK(check_conditions(pr).empty());
}

TEST_CASE("solve_params rejects out-of-domain inputs") {
    CHECK_THROWS_AS(solve_params(Rational(0), Rational(3, 2), Rational(11, 10), Limits{}), std::invalid_argument);
    CHECK_THROWS_AS(solve_params(Rational(3, 2), Rational(3, 2), Rational(11, 10), Limits{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_params(Rational(1, 2), Rational(1, 2), Rational(11, 10), Limits{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_params(Rational(1, 2), Rational(3, 2), Rational(1), Limits{}), std::invalid_argument);
}

TEST_CASE("solve_params reports limit breaches instead of computing the impossible") {
    // t = 101, so q^t >= 2^101 dwarfs any configured family size.
    CHECK_THROWS_AS(solve_params(Rational(1, 100), Rational(2), Rational(3, 2), Limits{}), LimitError);
    // Tiny dimension limit trips on n.
    CHECK_THROWS_AS(solve_params(Rational(3, 5), Rational(3, 2), Rational(11, 10), Limits{100000, 11}),
                    LimitError);
    // Large lambda forces a huge q even at depth 2.
    CHECK_THROWS_AS(solve_params(Rational(1), Rational(1), Rational(1000), Limits{}), LimitError);
}

TEST_CASE("solve_params applies overrides and re-validates") {
    ParamOverrides ov;
    ov.n = 11;
    CHECK_THROWS_AS(solve_params(Rational(3, 5), Rational(3, 2), Rational(11, 10), Limits{}, ov),
                    std::invalid_argument);
    ov.n = 14;  // anything >= 12 passes condition 4
    CisParams pr = solve_params(Rational(3, 5), Rational(3, 2), Rational(11, 10), Limits{}, ov);
    CHECK(pr.n == 14);
    CHECK(check_conditions(pr).empty());

    // Wider branching: the dimension rule follows the override.
    ParamOverrides wide;
    wide.q = 3;
    CisParams pq = solve_params(Rational(3, 5), Rational(3, 2), Rational(11, 10), Limits{}, wide);
    CHECK(pq.q == 3);
    CHECK(pq.n == 24);  // f_2 = 4 + 4*2*(3/2 + 1)
    auto [fam, tree] = build_cis(pq);
    CHECK(fam.size() == 9);
    CHECK(verify_cis(fam, tree, pq).empty());
    CHECK(verify_counterexample(fam, tree, pq, CounterexampleMode::exhaustive).empty());
}

TEST_CASE("check_conditions flags each condition separately") {
    CisParams pr = a1_params();
    CHECK(check_conditions(pr).empty());

    CisParams bad = pr;
    bad.t = 1;  // 1/1 < 3/5 fails
    auto v1 = check_conditions(bad);
    REQUIRE(v1.size() >= 1);
    CHECK(v1.front().find("condition 1") != std::string::npos);

    bad = pr;
    bad.p = 5;  // not a multiple of 4
    auto v2 = check_conditions(bad);
    REQUIRE(v2.size() >= 1);
    CHECK(v2.front().find("condition 2") != std::string::npos);

    bad = pr;
    bad.q = 1;  // 1 < (11/10)^4
    auto v3 = check_conditions(bad);
    REQUIRE(v3.size() >= 1);
    CHECK(v3.front().find("condition 3") != std::string::npos);

    bad = pr;
    bad.n = 11;
    auto v4 = check_conditions(bad);
    REQUIRE(v4.size() >= 1);
    CHECK(v4.front().find("condition 4") != std::string::npos);
}

TEST_CASE("capacity: closed form, base case, recurrence") {
    CisParams p1 = a1_params();
    CHECK(capacity(0, p1) == Rational(p1.p));  // f_0 = p
    CHECK(capacity(2, p1) == Rational(12));

    CisParams p2 = a2_params();
    CHECK(capacity(3, p2) == Rational(32));

    // Independent route: f_i = q f_{i-1} - (q-1)(p - p/a^(t-i)).
    for (const CisParams& pr : {p1, p2}) {
        for (Index i = 1; i <= pr.t; ++i) {
            Rational via_recurrence = Rational(pr.q) * capacity(i - 1, pr) -
                                      Rational(pr.q - 1) * (Rational(pr.p) - Rational(pr.p) / rat_pow(Rational(pr.a), static_cast<std::uint64_t>(pr.t - i)));
            CHECK(capacity(i, pr) == via_recurrence);
        }
    }

    CHECK_THROWS_AS(capacity(-1, p1), std::out_of_range);
    CHECK_THROWS_AS(capacity(3, p1), std::out_of_range);
}

TEST_CASE("build_cis reproduces the hand-traced family") {
    auto [fam, tree] = build_cis(a1_params());
    REQUIRE(fam.size() == 4);
    CHECK(fam[0].support == std::vector<Index>{1, 2, 3, 4});
    CHECK(fam[1].support == std::vector<Index>{1, 2, 5, 6});
    CHECK(fam[2].support == std::vector<Index>{7, 8, 9, 10});
    CHECK(fam[3].support == std::vector<Index>{7, 8, 11, 12});

    // Exhaustive independent pair scan: within-block 4, cross-block 8.
    CHECK(distance(fam[0], fam[1]) == 4);
    CHECK(distance(fam[2], fam[3]) == 4);
    for (std::size_t i : {0u, 1u})
        for (std::size_t j : {2u, 3u}) CHECK(distance(fam[i], fam[j]) == 8);

    CHECK(tree.level == 2);
    REQUIRE(tree.children.size() == 2);
    CHECK(tree.children[0].span() == std::vector<std::size_t>{0, 1});
    CHECK(tree.children[1].span() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("build_cis level distances on the depth-3 family") {
    CisParams pr = a2_params();
    auto [fam, tree] = build_cis(pr);
    REQUIRE(fam.size() == 8);
    for (const auto& v : fam) CHECK(v.weight() == pr.p);

    // Distance between leaves = 2p/a^(t-i) where i is the level of their
    // lowest common ancestor: 4, 8, 16 at levels 1, 2, 3.
    auto lca_level = [](std::size_t i, std::size_t j) {
        if (i / 2 == j / 2) return 1;
        if (i / 4 == j / 4) return 2;
        return 3;
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) {
            Index expected = Index{1} << (lca_level(i, j) + 1);  // 4, 8, 16
            CHECK(distance(fam[i], fam[j]) == expected);
        }
}

TEST_CASE("build_cis is deterministic") {
    CisParams pr = a2_params();
    auto [fam1, tree1] = build_cis(pr);
    auto [fam2, tree2] = build_cis(pr);
    CHECK(fam1 == fam2);
    CHECK(tree_to_string(tree1, pr) == tree_to_string(tree2, pr));
}

TEST_CASE("degenerate single-level construction: q disjoint blocks") {
    CisParams pr;
    pr.t = 1;
    pr.a = 2;
    pr.p = 4;
    pr.q = 3;
    pr.n = 12;  // f_1 = p + p(q-1) = pq = 12
    pr.alpha = Rational(1);
    pr.C = Rational(1);
    pr.lambda = Rational(2);
    auto [fam, tree] = build_cis(pr);
    REQUIRE(fam.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(distance(fam[i], fam[j]) == 2 * pr.p);
    CHECK(verify_cis(fam, tree, pr).empty());
}

TEST_CASE("shared core: every frame's forced coordinates sit in every spanned support") {
    CisParams pr = a2_params();
    auto [fam, tree] = build_cis(pr);

    auto walk = [&](auto&& self, const BlockTree& node) -> void {
        REQUIRE(node.frame.has_value());
        const auto& frame = node.frame->shared;
        CHECK(static_cast<Index>(frame.size()) ==
              pr.p - to_int64(BigInt(pr.p) / big_pow(BigInt(pr.a), pr.t - node.level)));
        for (std::size_t ix : node.span())
            CHECK(std::includes(fam[ix].support.begin(), fam[ix].support.end(), frame.begin(), frame.end()));
        // Frame budget: |T| >= f_level.
        CHECK(Rational(BigInt(node.frame->ground.size())) >= capacity(node.level, pr));
        for (const auto& child : node.children) self(self, child);
    };
    walk(walk, tree);
}

TEST_CASE("build_cis guards frame budgets") {
    CisParams pr = a1_params();
    pr.n = 11;  // below f_t = 12; bypasses solve_params on purpose
    CHECK_THROWS_AS(build_cis(pr), CapacityError);
}

TEST_CASE("verify_cis accepts the builder output") {
    for (const CisParams& pr : {a1_params(), a2_params()}) {
        auto [fam, tree] = build_cis(pr);
        CHECK(verify_cis(fam, tree, pr).empty());
    }
}

TEST_CASE("verify_cis reports a single-coordinate perturbation") {
    CisParams pr = a1_params();
    auto [fam, tree] = build_cis(pr);
    VectorFamily mutated(fam.dimension(), fam.weight());
    mutated.push_back(fam[0]);
    mutated.push_back(sv(12, {1, 2, 5, 7}));  // was {1, 2, 5, 6}
    mutated.push_back(fam[2]);
    mutated.push_back(fam[3]);

    auto violations = verify_cis(mutated, tree, pr);
    REQUIRE_FALSE(violations.empty());
    // The perturbed vector now meets the far block at distance 6, breaking
    // the exact cross distance at the root.
    CHECK(has_violation(violations, "root", "cross-distance"));
}

TEST_CASE("verify_cis: vacuous single-vector tree") {
    VectorFamily fam(12, 4);
    fam.push_back(sv(12, {1, 2, 3, 4}));
    BlockTree leaf;
    leaf.level = 0;
    leaf.leaf_index = 0;
    CisParams pr;
    pr.t = 0;
    pr.a = 1;
    pr.p = 4;
    pr.q = 1;
    pr.n = 12;
    CHECK(verify_cis(fam, leaf, pr).empty());
}

TEST_CASE("verify_cis throws on tree/family mismatches") {
    CisParams pr = a1_params();
    auto [fam, tree] = build_cis(pr);

    VectorFamily shorter(fam.dimension(), fam.weight());
    shorter.push_back(fam[0]);
    shorter.push_back(fam[1]);
    CHECK_THROWS_AS(verify_cis(shorter, tree, pr), std::invalid_argument);

    BlockTree bad = tree;
    bad.children[0].children[0].leaf_index = 3;  // duplicate of another leaf
    CHECK_THROWS_AS(verify_cis(fam, bad, pr), std::invalid_argument);
}

TEST_CASE("counterexample property holds exhaustively on built families") {
    for (const CisParams& pr : {a1_params(), a2_params()}) {
        auto [fam, tree] = build_cis(pr);
        CHECK(verify_counterexample(fam, tree, pr, CounterexampleMode::exhaustive).empty());
        CHECK(verify_counterexample(fam, tree, pr, CounterexampleMode::structural).empty());
    }
}

TEST_CASE("counterexample verification rejects an equidistant family") {
    VectorFamily fam(9, 3);  // 3 = q+1 vectors, pairwise distance 6, ratio 1
    fam.push_back(sv(9, {1, 2, 3}));
    fam.push_back(sv(9, {4, 5, 6}));
    fam.push_back(sv(9, {7, 8, 9}));
    CisParams pr;
    pr.t = 1;
    pr.a = 2;
    pr.p = 3;
    pr.q = 2;
    pr.n = 9;
    BlockTree unused;
    auto violations = verify_counterexample(fam, unused, pr, CounterexampleMode::exhaustive);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].clause == "subset-ratio");
    CHECK(violations[0].detail.find("1/1") != std::string::npos);
}

TEST_CASE("exhaustive verification respects the subset cap") {
    CisParams pr = a1_params();
    auto [fam, tree] = build_cis(pr);
    CHECK_THROWS_AS(verify_counterexample(fam, tree, pr, CounterexampleMode::exhaustive, 3), LimitError);
}
