// Operation counters shared by all engines.
#pragma once

#include <cstdint>

namespace shallowsort {

// Counter semantics:
//   comparisons    - every comparator invocation (detection, probes, kernels, ...)
//   moves          - element writes (array cells and kernel scratch)
//   walkback_steps - elements inspected by backward run scans
//   merge_cost     - sum of sizes of all intermediate runs produced (the usual m)
// merges and merge_comparisons are internal breakdowns; they are not part of
// the CSV schema.
struct Metrics {
    std::uint64_t comparisons = 0;
    std::uint64_t moves = 0;
    std::uint64_t walkback_steps = 0;
    std::uint64_t encode_ops = 0;
    std::uint64_t decode_ops = 0;
    std::uint64_t max_stack_depth = 0;
    std::uint64_t merge_cost = 0;
    std::uint64_t merges = 0;
    std::uint64_t merge_comparisons = 0;

    void on_comparison(std::uint64_t k = 1) { comparisons += k; }
    void on_move(std::uint64_t k = 1) { moves += k; }
    void on_walk(std::uint64_t k) { walkback_steps += k; }
    void on_encode() { ++encode_ops; }
    void on_decode() { ++decode_ops; }
    void on_merge(std::uint64_t span) { merge_cost += span; ++merges; }
    void on_merge_comparison(std::uint64_t k = 1) { merge_comparisons += k; }
    void observe_depth(std::uint64_t d) {
        if (d > max_stack_depth) max_stack_depth = d;
    }
};

// Drop-in replacement for timed runs; instrumentation compiles away.
struct NullMetrics {
    void on_comparison(std::uint64_t = 1) {}
    void on_move(std::uint64_t = 1) {}
    void on_walk(std::uint64_t) {}
    void on_encode() {}
    void on_decode() {}
    void on_merge(std::uint64_t) {}
    void on_merge_comparison(std::uint64_t = 1) {}
    void observe_depth(std::uint64_t) {}
};

// Empirical walkability constant: walk cost relative to the mandatory work.
inline double walkback_cost_report(const Metrics& m, std::uint64_t n) {
    return static_cast<double>(m.walkback_steps) /
           static_cast<double>(m.merge_cost + n);
}

}  // namespace shallowsort
