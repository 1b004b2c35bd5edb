// Benchmark CLI: generate inputs, sort files, run experiment grids, report
// input statistics, and diff merge traces between engines.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shallowsort/bench/input.hpp"
#include "shallowsort/bench/records.hpp"
#include "shallowsort/bench/runner.hpp"
#include "shallowsort/entropy.hpp"
#include "shallowsort/sort.hpp"
#include "shallowsort/verify.hpp"

namespace bench = shallowsort::bench;
using shallowsort::Engine;
using shallowsort::MergeKind;
using shallowsort::PolicyId;

namespace {

std::vector<std::int64_t> read_values(const std::string& path, bool binary) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<std::int64_t> v;
    if (binary) {
        std::int64_t x;
        while (in.read(reinterpret_cast<char*>(&x), sizeof x)) v.push_back(x);
    } else {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            v.push_back(std::stoll(line));
        }
    }
    return v;
}

void write_values(const std::string& path, const std::vector<std::int64_t>& v,
                  bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    if (binary) {
        for (std::int64_t x : v)
            out.write(reinterpret_cast<const char*>(&x), sizeof x);
    } else {
        for (std::int64_t x : v) out << x << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::uint64_t> parse_profile(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoull(item));
    return out;
}

bench::InputSpec make_spec(const std::string& family, std::uint64_t n,
                           std::uint64_t seed, std::uint64_t alphabet,
                           const std::string& profile) {
    bench::InputSpec spec;
    spec.family = bench::family_from_name(family);
    spec.n = n;
    spec.seed = seed;
    spec.alphabet = alphabet;
    if (spec.family == bench::Family::RunProfile) {
        spec.profile = parse_profile(profile);
        if (spec.n == 0)
            for (auto r : spec.profile) spec.n += r;
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stack-based natural mergesorts: walk-back and jump-back "
                 "in-place engines with a benchmark harness"};
    app.require_subcommand(1);

    // ---- gen ----
    std::string gen_family = "uniform_random", gen_out, gen_profile,
                gen_format = "text";
    std::uint64_t gen_n = 0, gen_seed = 0, gen_alphabet = 8;
    auto* gen = app.add_subcommand("gen", "write an input file");
    gen->add_option("--family", gen_family, "input family");
    gen->add_option("--n", gen_n, "element count");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--alphabet", gen_alphabet, "few_distinct alphabet size");
    gen->add_option("--profile", gen_profile, "run_profile lengths, comma separated");
    gen->add_option("--format", gen_format, "text|bin");
    gen->add_option("--out", gen_out, "output path")->required();

    // ---- sort ----
    std::string sort_file, sort_policy = "powersort", sort_engine = "standard",
                sort_kernel = "auto", sort_format = "text";
    double sort_c = 1.0, sort_alpha = 0.0;
    bool sort_verify = false;
    auto* sortcmd = app.add_subcommand("sort", "sort a file in place");
    sortcmd->add_option("file", sort_file, "input file")->required();
    sortcmd->add_option("--policy", sort_policy, "merge policy");
    sortcmd->add_option("--engine", sort_engine, "standard|walkback|jumpback");
    sortcmd->add_option("--kernel", sort_kernel, "buffered|rotation|auto");
    sortcmd->add_option("--format", sort_format, "text|bin");
    sortcmd->add_option("--c", sort_c, "c for c_adaptive_shivers");
    sortcmd->add_option("--alpha", sort_alpha,
                        "alpha for alpha_stack/alpha_merge");
    sortcmd->add_flag("--verify", sort_verify,
                      "check sorted-permutation against the input");

    // ---- bench ----
    std::vector<std::string> bench_families{"uniform_random"},
        bench_policies{"powersort"}, bench_engines{"standard"};
    std::vector<std::uint64_t> bench_sizes{1 << 16};
    std::vector<std::uint64_t> bench_seeds{1};
    std::string bench_out = "bench.csv", bench_kernel = "auto";
    unsigned bench_reps = 5, bench_threads = 0;
    std::uint64_t bench_alphabet = 8;
    auto* benchcmd = app.add_subcommand("bench", "run an experiment grid");
    benchcmd->add_option("--families", bench_families, "input families");
    benchcmd->add_option("--sizes", bench_sizes, "element counts");
    benchcmd->add_option("--seeds", bench_seeds, "rng seeds");
    benchcmd->add_option("--policies", bench_policies, "merge policies");
    benchcmd->add_option("--engines", bench_engines, "engines");
    benchcmd->add_option("--kernel", bench_kernel,
                         "buffered|rotation|auto (auto pairs buffered with "
                         "standard, rotation with the in-place engines)");
    benchcmd->add_option("--reps", bench_reps, "timed repetitions per cell");
    benchcmd->add_option("--threads", bench_threads, "worker threads");
    benchcmd->add_option("--alphabet", bench_alphabet, "few_distinct alphabet");
    benchcmd->add_option("--out", bench_out, "CSV destination")->required();

    // ---- stats ----
    std::string stats_file, stats_format = "text";
    auto* stats = app.add_subcommand("stats", "entropy and run count of a file");
    stats->add_option("file", stats_file, "input file")->required();
    stats->add_option("--format", stats_format, "text|bin");

    // ---- trace-diff ----
    std::string td_family = "uniform_random", td_policy = "powersort",
                td_a = "standard", td_b = "walkback", td_profile;
    std::uint64_t td_n = 1 << 12, td_seed = 0, td_alphabet = 8;
    double td_c = 1.0, td_alpha = 0.0;
    auto* td = app.add_subcommand("trace-diff",
                                  "compare merge traces of two engines");
    td->add_option("--family", td_family, "input family");
    td->add_option("--n", td_n, "element count");
    td->add_option("--seed", td_seed, "rng seed");
    td->add_option("--alphabet", td_alphabet, "few_distinct alphabet");
    td->add_option("--profile", td_profile, "run_profile lengths");
    td->add_option("--policy", td_policy, "merge policy");
    td->add_option("--engine-a", td_a, "first engine");
    td->add_option("--engine-b", td_b, "second engine");
    td->add_option("--c", td_c, "c for c_adaptive_shivers");
    td->add_option("--alpha", td_alpha, "alpha parameter");

    CLI11_PARSE(app, argc, argv);

    auto pick_alpha = [](const std::string& policy, double alpha) {
        if (alpha > 0) return alpha;
        return policy == "alpha_merge" ? 1.8 : 2.0;
    };

    try {
        if (gen->parsed()) {
            auto spec = make_spec(gen_family, gen_n, gen_seed, gen_alphabet,
                                  gen_profile);
            write_values(gen_out, bench::generate(spec), gen_format == "bin");
            return 0;
        }

        if (sortcmd->parsed()) {
            auto v = read_values(sort_file, sort_format == "bin");
            const auto input = sort_verify ? v : std::vector<std::int64_t>{};
            const PolicyId policy = bench::policy_from_name(
                sort_policy, sort_c, pick_alpha(sort_policy, sort_alpha));
            const Engine engine = bench::engine_from_name(sort_engine);
            const MergeKind kind = sort_kernel == "auto"
                                       ? bench::natural_kind(engine)
                                       : bench::kind_from_name(sort_kernel);
            shallowsort::Metrics m;
            shallowsort::sort(std::span<std::int64_t>(v), policy, engine, kind,
                              m);
            if (sort_verify &&
                !shallowsort::verify_sorted_permutation(
                    input, std::span<const std::int64_t>(v),
                    std::less<std::int64_t>{})) {
                std::cerr << "verification FAILED\n";
                return 1;
            }
            write_values(sort_file, v, sort_format == "bin");
            std::cout << "comparisons=" << m.comparisons
                      << " moves=" << m.moves
                      << " walkback_steps=" << m.walkback_steps
                      << " encode_ops=" << m.encode_ops
                      << " decode_ops=" << m.decode_ops
                      << " max_stack_depth=" << m.max_stack_depth
                      << " merge_cost=" << m.merge_cost << '\n';
            return 0;
        }

        if (benchcmd->parsed()) {
            std::vector<bench::InputSpec> specs;
            for (const auto& f : bench_families)
                for (auto n : bench_sizes)
                    for (auto s : bench_seeds)
                        specs.push_back(
                            make_spec(f, n, s, bench_alphabet, ""));
            std::vector<PolicyId> policies;
            for (const auto& p : bench_policies)
                policies.push_back(
                    bench::policy_from_name(p, 1.0, pick_alpha(p, 0.0)));
            std::vector<bench::TrialRecord> all;
            bench::ExperimentOptions opt;
            opt.repetitions = bench_reps;
            opt.threads = bench_threads;
            for (const auto& e : bench_engines) {
                const Engine engine = bench::engine_from_name(e);
                const MergeKind kind =
                    bench_kernel == "auto" ? bench::natural_kind(engine)
                                           : bench::kind_from_name(bench_kernel);
                auto part = bench::run_experiment(specs, policies, {engine},
                                                  {kind}, opt);
                all.insert(all.end(), part.begin(), part.end());
            }
            bench::report_csv(all, bench_out);
            std::cout << all.size() << " records -> " << bench_out << '\n';
            return 0;
        }

        if (stats->parsed()) {
            auto v = read_values(stats_file, stats_format == "bin");
            if (v.empty()) {
                std::cout << "n=0 runs=0 entropy=0\n";
                return 0;
            }
            auto runs = shallowsort::detect_runs(std::span<std::int64_t>(v),
                                                 std::less<std::int64_t>{});
            shallowsort::RunProfile profile;
            for (const auto& r : runs) profile.push_back(r.len);
            std::printf("n=%zu runs=%zu entropy=%.6f\n", v.size(), runs.size(),
                        shallowsort::run_entropy(profile));
            return 0;
        }

        if (td->parsed()) {
            auto spec =
                make_spec(td_family, td_n, td_seed, td_alphabet, td_profile);
            const PolicyId policy = bench::policy_from_name(
                td_policy, td_c, pick_alpha(td_policy, td_alpha));
            auto diff = bench::compare_traces(spec, policy,
                                              bench::engine_from_name(td_a),
                                              bench::engine_from_name(td_b));
            std::cout << diff.to_string() << '\n';
            return diff.equal ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
