// Benchmarks the OpenMP distance kernels against their serial reference
// implementations on seeded random families, and checks that both sides
// agree exactly (the reductions are integer min/max, so they must).
//
//   bench_kernels [m] [p] [n] [reps]

#include "drkit/distance.hpp"
#include "drkit/kernels.hpp"
#include "drkit/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto start = Clock::now();
        body();
        best = std::min(best, ms_since(start));
    }
    return best;
}

void report(const char* kernel, double serial_ms, double parallel_ms) {
    std::printf("%-20s %10.2f ms %10.2f ms %8.2fx\n", kernel, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace drkit;

    const Index m = argc > 1 ? std::stoll(argv[1]) : 1500;
    const Index p = argc > 2 ? std::stoll(argv[2]) : 24;
    const Index n = argc > 3 ? std::stoll(argv[3]) : 4096;
    const int reps = argc > 4 ? std::stoi(argv[4]) : 3;

    VectorFamily fam = random_family(n, p, m, 12345);
    std::vector<std::size_t> idx = all_indices(fam);
    SupportVector probe = random_family(n, p, 1, 999)[0];

    // Pairwise-disjoint supports: every cross distance is exactly 2p, so
    // the mismatch scan has to traverse everything.
    VectorFamily disjoint(m * p, p);
    for (Index k = 0; k < m; ++k) {
        std::vector<Index> support(static_cast<std::size_t>(p));
        for (Index i = 0; i < p; ++i) support[static_cast<std::size_t>(i)] = k * p + i + 1;
        disjoint.push_back(SupportVector::make(m * p, std::move(support)));
    }
    std::vector<std::size_t> all = all_indices(disjoint);
    std::vector<std::size_t> half(all.begin(), all.begin() + all.size() / 2);
    std::vector<std::size_t> rest(all.begin() + all.size() / 2, all.end());

    std::printf("m=%lld p=%lld n=%lld threads=%d reps=%d\n", static_cast<long long>(m),
                static_cast<long long>(p), static_cast<long long>(n), kernel_threads(), reps);
    std::printf("%-20s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    PairStats ref_stats{}, par_stats{};
    double s = time_best_of(reps, [&] { ref_stats = serial::pair_stats(fam, idx); });
    double t = time_best_of(reps, [&] { par_stats = pair_stats(fam, idx); });
    if (ref_stats.min_dist != par_stats.min_dist || ref_stats.max_dist != par_stats.max_dist) {
        std::fprintf(stderr, "pair_stats mismatch between serial and openmp\n");
        return 1;
    }
    report("pair_stats", s, t);

    Index ref_min = 0, par_min = 0;
    s = time_best_of(reps, [&] { ref_min = serial::min_distance_to(fam, 0, idx); });
    t = time_best_of(reps, [&] { par_min = min_distance_to(fam, 0, idx); });
    if (ref_min != par_min) {
        std::fprintf(stderr, "min_distance_to mismatch between serial and openmp\n");
        return 1;
    }
    report("min_distance_to", s, t);

    Index ref_cand = 0, par_cand = 0;
    s = time_best_of(reps, [&] { ref_cand = serial::min_distance_to(fam, probe); });
    t = time_best_of(reps, [&] { par_cand = min_distance_to(fam, probe); });
    if (ref_cand != par_cand) {
        std::fprintf(stderr, "candidate min_distance_to mismatch between serial and openmp\n");
        return 1;
    }
    report("candidate scan", s, t);

    // No mismatch exists, so both sides traverse every cross pair.
    std::optional<std::pair<std::size_t, std::size_t>> ref_mm, par_mm;
    s = time_best_of(reps, [&] { ref_mm = serial::find_cross_mismatch(disjoint, half, rest, 2 * p); });
    t = time_best_of(reps, [&] { par_mm = find_cross_mismatch(disjoint, half, rest, 2 * p); });
    if (ref_mm != par_mm) {
        std::fprintf(stderr, "find_cross_mismatch mismatch between serial and openmp\n");
        return 1;
    }
    report("cross mismatch", s, t);

    std::puts("agreement: exact on all kernels");
    return 0;
}
