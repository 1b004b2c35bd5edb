// Grid runner: every (spec x policy x engine x kind) cell is sorted once
// with counters on, verified, then timed over the requested repetitions with
// counters compiled out.  Cells run in parallel; each owns its array.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "shallowsort/bench/input.hpp"
#include "shallowsort/bench/records.hpp"
#include "shallowsort/policy.hpp"
#include "shallowsort/sort.hpp"
#include "shallowsort/trace.hpp"

namespace shallowsort::bench {

std::string policy_name(const PolicyId& p);
std::string engine_name(Engine e);
std::string kind_name(MergeKind k);
PolicyId policy_from_name(const std::string& name, double c, double alpha);
Engine engine_from_name(const std::string& name);
MergeKind kind_from_name(const std::string& name);

// The kernel each engine naturally pairs with: buffered for the full-stack
// baseline, rotation for the strictly in-place engines.
MergeKind natural_kind(Engine e);

struct ExperimentOptions {
    unsigned repetitions = 5;
    unsigned threads = 0;  // 0: hardware concurrency
};

// One record per (spec, policy, engine, kind, repetition); wall_ns is the
// repetition's own timing, the counters come from the single instrumented
// pass.  Throws std::runtime_error when any trial fails verification.
std::vector<TrialRecord> run_experiment(const std::vector<InputSpec>& specs,
                                        const std::vector<PolicyId>& policies,
                                        const std::vector<Engine>& engines,
                                        const std::vector<MergeKind>& kinds,
                                        const ExperimentOptions& opt = {});

struct TraceDiff {
    bool equal = true;
    std::size_t index = 0;  // first divergence when !equal
    bool only_in_a = false, only_in_b = false;
    MergeRecord a, b;
    std::string to_string() const;
};

// Replays both engines on identical copies of the generated input and
// compares their merge traces record by record.
TraceDiff compare_traces(const InputSpec& spec, const PolicyId& policy,
                         Engine engine_a, Engine engine_b,
                         MergeKind kind = MergeKind::Buffered);

// Small shared utility: run fn(i) for i in [0, count) on `threads` workers.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

double median(std::vector<double> xs);

}  // namespace shallowsort::bench
