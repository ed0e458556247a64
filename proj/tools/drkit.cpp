// drkit -- command-line driver for the constant-weight distance-ratio
// toolkit: builds recursive block families, extracts bounded-ratio
// subsets with certificates, verifies both, and runs the brute-force
// oracle and packing experiments.
//
// Exit codes: 0 success / verified, 1 verification found violations,
// 2 usage, domain, or limit errors.

#include "drkit/combinatorics.hpp"
#include "drkit/construct.hpp"
#include "drkit/distance.hpp"
#include "drkit/errors.hpp"
#include "drkit/extract.hpp"
#include "drkit/io.hpp"
#include "drkit/oracle.hpp"
#include "drkit/packing.hpp"
#include "drkit/version.hpp"

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace drkit;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

Index default_brute_cap() {
    if (const char* env = std::getenv("DRKIT_MAX_BRUTE")) {
        try {
            return static_cast<Index>(std::stoll(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("DRKIT_MAX_BRUTE is not an integer: '" + std::string(env) + "'");
        }
    }
    return 20;
}

std::string describe_params(const CisParams& pr) {
    return "t=" + std::to_string(pr.t) + " a=" + std::to_string(pr.a) + " p=" + std::to_string(pr.p) +
           " q=" + std::to_string(pr.q) + " n=" + std::to_string(pr.n);
}

std::string joined_indices(const std::vector<std::size_t>& idx) {
    std::string out;
    for (std::size_t ix : idx) out += (out.empty() ? "" : " ") + std::to_string(ix + 1);
    return out;
}

struct ConstructArgs {
    std::string alpha, C, lambda;
    std::optional<Index> t, a, p, q, n;
    std::string out, tree, params, manifest;
    Index max_family_size = 100000;
    Index max_dimension = 1000000;
};

int run_construct(const ConstructArgs& args) {
    Rational alpha = parse_rational(args.alpha);
    Rational C = parse_rational(args.C);
    Rational lambda = parse_rational(args.lambda);
    Limits limits{args.max_family_size, args.max_dimension};
    ParamOverrides overrides{args.t, args.a, args.p, args.q, args.n};

    CisParams pr = solve_params(alpha, C, lambda, limits, overrides);
    auto [family, tree] = build_cis(pr);

    save_family(family, args.out);
    save_tree(tree, pr, args.tree);
    if (!args.params.empty()) save_params(pr, args.params);

    Manifest manifest;
    manifest.command = "construct";
    manifest.args = {{"alpha", format_rational(alpha)},
                     {"C", format_rational(C)},
                     {"lambda", format_rational(lambda)},
                     {"max-family-size", std::to_string(limits.max_family_size)},
                     {"max-dimension", std::to_string(limits.max_dimension)}};
    for (auto [name, value] :
         {std::pair{"t", args.t}, {"a", args.a}, {"p", args.p}, {"q", args.q}, {"n", args.n}})
        if (value) manifest.args.emplace_back(name, std::to_string(*value));
    manifest.outputs.emplace_back("family", args.out);
    manifest.outputs.emplace_back("tree", args.tree);
    if (!args.params.empty()) manifest.outputs.emplace_back("params", args.params);
    save_manifest(manifest, args.manifest.empty() ? args.out + ".manifest" : args.manifest);

    std::cout << "params: " << describe_params(pr) << "\n";
    std::cout << "alpha=" << format_rational(pr.alpha) << " C=" << format_rational(pr.C)
              << " lambda=" << format_rational(pr.lambda) << "\n";
    std::cout << "family: m=" << family.size() << " written to " << args.out << "\n";
    return kExitOk;
}

struct ExtractArgs {
    std::string C, in, out, cert, manifest;
};

int run_extract(const ExtractArgs& args) {
    Rational C = parse_rational(args.C);
    VectorFamily family = load_family(args.in);
    auto [subset, cert] = extract_subset(family, C);

    save_family(subset, args.out);
    save_certificate(cert, args.cert);

    Manifest manifest;
    manifest.command = "extract";
    manifest.args = {{"C", format_rational(C)}};
    manifest.inputs.emplace_back("family", args.in);
    manifest.outputs.emplace_back("subset", args.out);
    manifest.outputs.emplace_back("certificate", args.cert);
    save_manifest(manifest, args.manifest.empty() ? args.out + ".manifest" : args.manifest);

    std::cout << "|K|=" << family.size() << " t=" << cert.t << " |K'|=" << subset.size()
              << " dr=" << format_rational(distance_ratio(subset)) << "\n";
    std::cout << "certificate: " << (cert.kind == ExtractionCertificate::Kind::ball ? "ball" : "net")
              << " level=" << cert.level << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string in, tree, params, counterexample;
    Index subset_cap = 2000000;
};

int run_verify(const VerifyArgs& args) {
    VectorFamily family = load_family(args.in);
    if (family.size() >= 2) {
        DistanceStats stats = distance_stats(family);
        std::cout << "stats: min=" << stats.min_dist << " max=" << stats.max_dist
                  << " ratio=" << format_rational(stats.ratio) << "\n";
    } else {
        std::cout << "stats: ratio=" << format_rational(distance_ratio(family)) << " (below two vectors)\n";
    }

    if (args.tree.empty() != args.params.empty())
        throw std::invalid_argument("--tree and --params must be given together");

    std::vector<Violation> violations;
    if (!args.tree.empty()) {
        BlockTree tree = load_tree(args.tree);
        CisParams pr = load_params(args.params);
        auto structural = verify_cis(family, tree, pr);
        violations.insert(violations.end(), structural.begin(), structural.end());
        std::cout << "block structure: " << (structural.empty() ? "ok" : "violated") << "\n";

        if (!args.counterexample.empty()) {
            CounterexampleMode mode = args.counterexample == "exhaustive" ? CounterexampleMode::exhaustive
                                                                          : CounterexampleMode::structural;
            auto subsetwise = verify_counterexample(family, tree, pr, mode, args.subset_cap);
            violations.insert(violations.end(), subsetwise.begin(), subsetwise.end());
            std::cout << "counterexample property (" << args.counterexample
                      << "): " << (subsetwise.empty() ? "ok" : "violated") << "\n";
        }
    } else if (!args.counterexample.empty()) {
        throw std::invalid_argument("--counterexample needs --tree and --params");
    }

    for (const auto& v : violations)
        std::cout << "violation: " << v.path << " " << v.clause << ": " << v.detail << "\n";
    return violations.empty() ? kExitOk : kExitViolations;
}

struct OracleArgs {
    std::string C, in;
    std::optional<Index> cap;
};

int run_oracle(const OracleArgs& args) {
    Rational C = parse_rational(args.C);
    VectorFamily family = load_family(args.in);
    Index cap = args.cap ? *args.cap : default_brute_cap();

    OracleResult result;
    try {
        result = best_subset_bruteforce(family, C, cap);
    } catch (const LimitError& e) {
        throw LimitError(std::string(e.what()) + " (raise --cap / DRKIT_MAX_BRUTE, or sample a smaller family)");
    }
    std::cout << "oracle: size=" << result.size << " ratio=" << format_rational(result.ratio)
              << " explored=" << result.explored << " pruned=" << result.pruned << "\n";
    std::cout << "subset: " << joined_indices(result.subset) << "\n";

    if (C > 2) {
        auto [subset, cert] = extract_subset(family, C);
        std::cout << "extract: size=" << subset.size() << " dr=" << format_rational(distance_ratio(subset))
                  << " (" << (cert.kind == ExtractionCertificate::Kind::ball ? "ball" : "net") << ")\n";
        std::cout << "comparison: extract " << subset.size() << " <= oracle " << result.size << ": "
                  << (static_cast<std::int64_t>(subset.size()) <= result.size ? "yes" : "NO") << "\n";
    } else {
        std::cout << "extract: skipped (extraction requires C > 2)\n";
    }
    return kExitOk;
}

struct PackArgs {
    Index n = 0, p = 0, dmin = 0;
    std::string sample;  // "seed,count"
    std::string out, manifest;
};

int run_pack(const PackArgs& args) {
    PackingParams params;
    params.n = args.n;
    params.p = args.p;
    params.d_min = args.dmin;
    if (!args.sample.empty()) {
        auto comma = args.sample.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--sample expects 'seed,count', got '" + args.sample + "'");
        params.mode = PackingParams::Mode::seeded_sample;
        params.seed = std::stoull(args.sample.substr(0, comma));
        params.sample_count = std::stoll(args.sample.substr(comma + 1));
    }

    VectorFamily packed = greedy_packing(params);
    save_family(packed, args.out);

    Manifest manifest;
    manifest.command = "pack";
    manifest.args = {{"n", std::to_string(args.n)}, {"p", std::to_string(args.p)},
                     {"dmin", std::to_string(args.dmin)}};
    if (!args.sample.empty()) manifest.args.emplace_back("sample", args.sample);
    manifest.outputs.emplace_back("family", args.out);
    save_manifest(manifest, args.manifest.empty() ? args.out + ".manifest" : args.manifest);

    std::cout << "packing: size=" << packed.size();
    if (packed.size() >= 2) {
        DistanceStats stats = distance_stats(packed);
        std::cout << " min=" << stats.min_dist << " max=" << stats.max_dist
                  << " ratio=" << format_rational(stats.ratio);
    }
    std::cout << "\n";
    return kExitOk;
}

struct AlphaScanArgs {
    Index n = 0, p = 0, m = 0, trials = 0;
    std::string C, csv, manifest;
    std::uint64_t seed = 0;
    std::optional<Index> cap;
};

int run_alpha_scan(const AlphaScanArgs& args) {
    Rational C = parse_rational(args.C);
    Index cap = args.cap ? *args.cap : default_brute_cap();
    if (args.trials > 0 && args.m < 2)
        throw std::invalid_argument("alpha-scan needs m >= 2 (the exponent divides by ln m)");
    if (args.trials > 0 && args.m > cap && !(C > 2))
        throw std::invalid_argument("m exceeds the brute-force cap and C <= 2 rules out extraction; "
                                    "raise --cap or choose C > 2");

    std::string csv = "trial,seed,m,method,size,exponent\n";
    for (Index k = 0; k < args.trials; ++k) {
        std::uint64_t trial_seed = args.seed + static_cast<std::uint64_t>(k);
        VectorFamily family = random_family(args.n, args.p, args.m, trial_seed);
        std::int64_t size;
        const char* method;
        if (args.m <= cap) {
            size = best_subset_bruteforce(family, C, cap).size;
            method = "oracle";
        } else {
            size = static_cast<std::int64_t>(extract_subset(family, C).first.size());
            method = "extract";
        }
        double exponent =
            std::log(static_cast<double>(size)) / std::log(static_cast<double>(family.size()));
        char row[160];
        std::snprintf(row, sizeof row, "%" PRId64 ",%" PRIu64 ",%" PRId64 ",%s,%" PRId64 ",%.6f\n",
                      static_cast<std::int64_t>(k), trial_seed, static_cast<std::int64_t>(args.m), method,
                      size, exponent);
        csv += row;
    }
    atomic_write(args.csv, csv);

    Manifest manifest;
    manifest.command = "alpha-scan";
    manifest.args = {{"n", std::to_string(args.n)},       {"p", std::to_string(args.p)},
                     {"m", std::to_string(args.m)},       {"C", format_rational(C)},
                     {"trials", std::to_string(args.trials)}, {"seed", std::to_string(args.seed)},
                     {"cap", std::to_string(cap)}};
    manifest.outputs.emplace_back("csv", args.csv);
    save_manifest(manifest, args.manifest.empty() ? args.csv + ".manifest" : args.manifest);

    std::cout << "alpha-scan: " << args.trials << " trials written to " << args.csv << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-weight distance-ratio toolkit"};
    app.set_version_flag("--version", std::string("drkit ") + drkit::kVersion);
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "build a recursive block family");
    construct->add_option("--alpha", construct_args.alpha, "target exponent, num/den")->required();
    construct->add_option("--C", construct_args.C, "target ratio bound, num/den")->required();
    construct->add_option("--lambda", construct_args.lambda, "family growth base, num/den (> 1)")->required();
    construct->add_option("--t", construct_args.t, "override recursion depth");
    construct->add_option("--a", construct_args.a, "override ratio integer");
    construct->add_option("--p", construct_args.p, "override weight");
    construct->add_option("--q", construct_args.q, "override branching");
    construct->add_option("--n", construct_args.n, "override dimension");
    construct->add_option("--out", construct_args.out, "family file to write")->required();
    construct->add_option("--tree", construct_args.tree, "block-tree file to write")->required();
    construct->add_option("--params", construct_args.params, "resolved-params file to write");
    construct->add_option("--manifest", construct_args.manifest, "manifest file (default <out>.manifest)");
    construct->add_option("--max-family-size", construct_args.max_family_size, "limit on q^t");
    construct->add_option("--max-dimension", construct_args.max_dimension, "limit on n");

    ExtractArgs extract_args;
    auto* extract = app.add_subcommand("extract", "extract a bounded-ratio subset with a certificate");
    extract->add_option("--C", extract_args.C, "ratio bound, num/den (> 2)")->required();
    extract->add_option("--in", extract_args.in, "family file to read")->required();
    extract->add_option("--out", extract_args.out, "subset family file to write")->required();
    extract->add_option("--cert", extract_args.cert, "certificate file to write")->required();
    extract->add_option("--manifest", extract_args.manifest, "manifest file (default <out>.manifest)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "distance stats and structural verification");
    verify->add_option("--in", verify_args.in, "family file to read")->required();
    verify->add_option("--tree", verify_args.tree, "block-tree file to read");
    verify->add_option("--params", verify_args.params, "params file to read");
    verify->add_option("--counterexample", verify_args.counterexample, "subset property check")
        ->check(CLI::IsMember({"structural", "exhaustive"}));
    verify->add_option("--subset-cap", verify_args.subset_cap, "cap on exhaustively scanned subsets");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "exact best subset by branch and bound");
    oracle->add_option("--C", oracle_args.C, "ratio bound, num/den")->required();
    oracle->add_option("--in", oracle_args.in, "family file to read")->required();
    oracle->add_option("--cap", oracle_args.cap, "brute-force size cap (default DRKIT_MAX_BRUTE or 20)");

    PackArgs pack_args;
    auto* pack = app.add_subcommand("pack", "greedy minimum-distance packing over the weight-p slice");
    pack->add_option("--n", pack_args.n, "dimension")->required();
    pack->add_option("--p", pack_args.p, "weight")->required();
    pack->add_option("--dmin", pack_args.dmin, "target minimum distance (odd rounds up)")->required();
    pack->add_option("--sample", pack_args.sample, "seed,count: sample instead of full lexicographic scan");
    pack->add_option("--out", pack_args.out, "family file to write")->required();
    pack->add_option("--manifest", pack_args.manifest, "manifest file (default <out>.manifest)");

    AlphaScanArgs alpha_args;
    auto* alpha_scan = app.add_subcommand("alpha-scan", "empirical best-subset exponents over seeded trials");
    alpha_scan->add_option("--n", alpha_args.n, "dimension")->required();
    alpha_scan->add_option("--p", alpha_args.p, "weight")->required();
    alpha_scan->add_option("--m", alpha_args.m, "family size per trial")->required();
    alpha_scan->add_option("--C", alpha_args.C, "ratio bound, num/den")->required();
    alpha_scan->add_option("--trials", alpha_args.trials, "number of trials")->required();
    alpha_scan->add_option("--seed", alpha_args.seed, "base seed; trial k uses seed+k");
    alpha_scan->add_option("--csv", alpha_args.csv, "CSV file to write")->required();
    alpha_scan->add_option("--cap", alpha_args.cap, "brute-force size cap (default DRKIT_MAX_BRUTE or 20)");
    alpha_scan->add_option("--manifest", alpha_args.manifest, "manifest file (default <csv>.manifest)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitError;
    }

    try {
        if (construct->parsed()) return run_construct(construct_args);
        if (extract->parsed()) return run_extract(extract_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
        if (pack->parsed()) return run_pack(pack_args);
        if (alpha_scan->parsed()) return run_alpha_scan(alpha_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;  // unreachable with require_subcommand(1)
}
