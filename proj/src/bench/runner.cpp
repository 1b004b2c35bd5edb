#include "shallowsort/bench/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "shallowsort/entropy.hpp"
#include "shallowsort/verify.hpp"

namespace shallowsort::bench {

std::string policy_name(const PolicyId& p) {
    switch (p.kind) {
        case PolicyKind::PowerSort: return "powersort";
        case PolicyKind::CAdaptiveShivers: return "c_adaptive_shivers";
        case PolicyKind::Shivers: return "shivers";
        case PolicyKind::AlphaStack: return "alpha_stack";
        case PolicyKind::TwoMerge: return "two_merge";
        case PolicyKind::AlphaMerge: return "alpha_merge";
        case PolicyKind::TimSort: return "timsort";
        case PolicyKind::OriginalTimSort: return "original_timsort";
    }
    return "?";
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Standard: return "standard";
        case Engine::Walkback: return "walkback";
        case Engine::Jumpback: return "jumpback";
    }
    return "?";
}

std::string kind_name(MergeKind k) {
    return k == MergeKind::Buffered ? "buffered" : "rotation";
}

PolicyId policy_from_name(const std::string& name, double c, double alpha) {
    if (name == "powersort") return PolicyId::power_sort();
    if (name == "c_adaptive_shivers") return PolicyId::c_adaptive_shivers(c);
    if (name == "shivers") return PolicyId::shivers();
    if (name == "alpha_stack") return PolicyId::alpha_stack(alpha);
    if (name == "two_merge") return PolicyId::two_merge();
    if (name == "alpha_merge") return PolicyId::alpha_merge(alpha);
    if (name == "timsort") return PolicyId::timsort();
    if (name == "original_timsort") return PolicyId::original_timsort();
    throw std::invalid_argument("unknown policy: " + name);
}

Engine engine_from_name(const std::string& name) {
    if (name == "standard") return Engine::Standard;
    if (name == "walkback") return Engine::Walkback;
    if (name == "jumpback") return Engine::Jumpback;
    throw std::invalid_argument("unknown engine: " + name);
}

MergeKind kind_from_name(const std::string& name) {
    if (name == "buffered") return MergeKind::Buffered;
    if (name == "rotation") return MergeKind::InPlaceRotation;
    throw std::invalid_argument("unknown kernel: " + name);
}

MergeKind natural_kind(Engine e) {
    return e == Engine::Standard ? MergeKind::Buffered
                                 : MergeKind::InPlaceRotation;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

double median(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size() / 2;
    return xs.size() % 2 ? xs[k] : 0.5 * (xs[k - 1] + xs[k]);
}

namespace {

struct Cell {
    InputSpec spec;
    PolicyId policy;
    Engine engine;
    MergeKind kind;
};

std::string cell_label(const Cell& c) {
    std::ostringstream os;
    os << c.spec.family_name() << " n=" << c.spec.n << " seed=" << c.spec.seed
       << " policy=" << policy_name(c.policy)
       << " engine=" << engine_name(c.engine)
       << " kernel=" << kind_name(c.kind);
    return os.str();
}

}  // namespace

std::vector<TrialRecord> run_experiment(const std::vector<InputSpec>& specs,
                                        const std::vector<PolicyId>& policies,
                                        const std::vector<Engine>& engines,
                                        const std::vector<MergeKind>& kinds,
                                        const ExperimentOptions& opt) {
    std::vector<Cell> cells;
    for (const auto& s : specs)
        for (const auto& p : policies)
            for (const auto& e : engines)
                for (const auto& k : kinds) cells.push_back({s, p, e, k});

    const unsigned reps = std::max(1u, opt.repetitions);
    std::vector<std::vector<TrialRecord>> results(cells.size());
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mu;

    parallel_for(cells.size(), opt.threads, [&](std::size_t ci) {
        if (failed.load()) return;
        const Cell& cell = cells[ci];
        try {
            const std::vector<std::int64_t> input = generate(cell.spec);

            // input shape, measured on a scratch copy
            std::vector<std::int64_t> shape = input;
            auto runs = detect_runs(std::span<std::int64_t>(shape),
                                    std::less<std::int64_t>{});
            RunProfile profile;
            for (const auto& r : runs) profile.push_back(r.len);
            const double entropy = profile.empty() ? 0.0 : run_entropy(profile);

            // instrumented pass, verified
            std::vector<std::int64_t> work = input;
            Metrics m;
            sort(std::span<std::int64_t>(work), cell.policy, cell.engine,
                 cell.kind, m);
            if (!verify_sorted_permutation(input,
                                           std::span<const std::int64_t>(work),
                                           std::less<std::int64_t>{}))
                throw std::runtime_error("verification failed");

            TrialRecord base;
            base.algorithm = policy_name(cell.policy);
            base.engine = engine_name(cell.engine);
            base.family = cell.spec.family_name();
            base.n = cell.spec.n;
            base.seed = cell.spec.seed;
            base.comparisons = m.comparisons;
            base.moves = m.moves;
            base.walkback_steps = m.walkback_steps;
            base.encode_ops = m.encode_ops;
            base.decode_ops = m.decode_ops;
            base.max_stack_depth = m.max_stack_depth;
            base.merge_cost = m.merge_cost;
            base.entropy = entropy;
            base.run_count = profile.size();

            // timed passes, instrumentation compiled out
            for (unsigned r = 0; r < reps; ++r) {
                work = input;
                NullMetrics nm;
                const auto t0 = std::chrono::steady_clock::now();
                sort(std::span<std::int64_t>(work), std::less<std::int64_t>{},
                     cell.policy, cell.engine, cell.kind, nm);
                const auto t1 = std::chrono::steady_clock::now();
                TrialRecord rec = base;
                rec.wall_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t1 -
                                                                          t0)
                        .count());
                results[ci].push_back(std::move(rec));
            }
        } catch (const std::exception& ex) {
            std::lock_guard<std::mutex> lock(failure_mu);
            failed.store(true);
            if (failure.empty())
                failure = std::string(ex.what()) + " [" + cell_label(cell) + "]";
        }
    });

    if (failed.load()) throw std::runtime_error(failure);
    std::vector<TrialRecord> flat;
    for (auto& group : results)
        for (auto& r : group) flat.push_back(std::move(r));
    return flat;
}

std::string TraceDiff::to_string() const {
    if (equal) return "traces equal";
    std::ostringstream os;
    os << "first divergence at merge " << index << ": ";
    auto one = [&](bool missing, const MergeRecord& r) {
        if (missing)
            os << "(end of trace)";
        else
            os << "(start=" << r.left_start << " left=" << r.left_len
               << " right=" << r.right_len << ")";
    };
    one(only_in_b, a);
    os << " vs ";
    one(only_in_a, b);
    return os.str();
}

TraceDiff compare_traces(const InputSpec& spec, const PolicyId& policy,
                         Engine engine_a, Engine engine_b, MergeKind kind) {
    const std::vector<std::int64_t> input = generate(spec);
    auto trace_of = [&](Engine e) {
        std::vector<std::int64_t> work = input;
        Metrics m;
        TraceSink t;
        sort(std::span<std::int64_t>(work), std::less<std::int64_t>{}, policy,
             e, kind, m, &t);
        return t;
    };
    const TraceSink ta = trace_of(engine_a);
    const TraceSink tb = trace_of(engine_b);

    TraceDiff d;
    const std::size_t n = std::min(ta.merges.size(), tb.merges.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!(ta.merges[i] == tb.merges[i])) {
            d.equal = false;
            d.index = i;
            d.a = ta.merges[i];
            d.b = tb.merges[i];
            return d;
        }
    }
    if (ta.merges.size() != tb.merges.size()) {
        d.equal = false;
        d.index = n;
        d.only_in_a = ta.merges.size() > n;
        d.only_in_b = tb.merges.size() > n;
        if (d.only_in_a) d.a = ta.merges[n];
        if (d.only_in_b) d.b = tb.merges[n];
    }
    return d;
}

}  // namespace shallowsort::bench
