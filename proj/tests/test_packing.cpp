#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drkit/combinatorics.hpp"
#include "drkit/distance.hpp"
#include "drkit/kernels.hpp"
#include "drkit/packing.hpp"

using namespace drkit;

TEST_CASE("slice enumeration is lexicographic and complete") {
    SliceStream stream(4, 2);
    std::vector<std::vector<Index>> seen;
    while (auto v = stream.next()) seen.push_back(v->support);
    CHECK(seen == std::vector<std::vector<Index>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(stream.next().has_value());  // stays exhausted
}

TEST_CASE("slice of weight n is the single all-ones support") {
    SliceStream stream(3, 3);
    auto v = stream.next();
    REQUIRE(v.has_value());
    CHECK(v->support == std::vector<Index>{1, 2, 3});
    CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("slice count matches the binomial coefficient") {
    SliceStream stream(16, 8);
    std::int64_t count = 0;
    while (stream.next()) ++count;
    CHECK(count == 12870);
    CHECK(binomial(16, 8) == 12870);
}

TEST_CASE("packing with the parity-floor threshold keeps everything") {
    PackingParams params;
    params.n = 5;
    params.p = 2;
    params.d_min = 2;
    CHECK(greedy_packing(params).size() == 10);  // C(5,2)
}

TEST_CASE("packing at the diameter picks consecutive disjoint blocks") {
    PackingParams params;
    params.n = 10;
    params.p = 3;
    params.d_min = 6;
    VectorFamily packed = greedy_packing(params);
    REQUIRE(packed.size() == 3);  // floor(n/p)
    CHECK(packed[0].support == std::vector<Index>{1, 2, 3});
    CHECK(packed[1].support == std::vector<Index>{4, 5, 6});
    CHECK(packed[2].support == std::vector<Index>{7, 8, 9});
}

TEST_CASE("odd thresholds round up to even") {
    PackingParams odd;
    odd.n = 10;
    odd.p = 3;
    odd.d_min = 5;
    PackingParams even = odd;
    even.d_min = 6;
    CHECK(greedy_packing(odd) == greedy_packing(even));
}

TEST_CASE("the reference slice packing") {
    PackingParams params;
    params.n = 16;
    params.p = 8;
    params.d_min = 4;  // even round-up of ceil((p+1)/4) = 3
    VectorFamily packed = greedy_packing(params);

    CHECK(packed.size() == 870);  // golden, pinned on first verified run
    auto idx = all_indices(packed);
    PairStats stats = pair_stats(packed, idx);
    CHECK(stats.min_dist >= 4);
    CHECK(Rational(stats.max_dist, stats.min_dist) <= Rational(2 * params.p, 4));
    CHECK(Rational(stats.max_dist, stats.min_dist) < Rational(8));
}

TEST_CASE("seeded sampling mode is deterministic and separated") {
    PackingParams params;
    params.n = 40;
    params.p = 6;
    params.d_min = 6;
    params.mode = PackingParams::Mode::seeded_sample;
    params.seed = 77;
    params.sample_count = 200;

    VectorFamily a = greedy_packing(params);
    VectorFamily b = greedy_packing(params);
    CHECK(a == b);
    REQUIRE(a.size() >= 2);
    auto idx = all_indices(a);
    CHECK(pair_stats(a, idx).min_dist >= 6);
}

TEST_CASE("packing rejects bad parameters") {
    PackingParams params;
    params.n = 4;
    params.p = 5;
    params.d_min = 2;
    CHECK_THROWS_AS(greedy_packing(params), std::invalid_argument);
    params.p = 2;
    params.d_min = 0;
    CHECK_THROWS_AS(greedy_packing(params), std::invalid_argument);
}
