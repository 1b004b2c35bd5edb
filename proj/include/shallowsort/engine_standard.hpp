// Reference driver: unbounded run stack, every length known.  Runs are
// detected one at a time at push so its merge trace is directly comparable
// with the in-place engines.
#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "shallowsort/merge.hpp"
#include "shallowsort/metrics.hpp"
#include "shallowsort/policy.hpp"
#include "shallowsort/runs.hpp"
#include "shallowsort/trace.hpp"

namespace shallowsort {

namespace detail {

// StackView over the complete run stack.  Probes always answer; budgets are
// irrelevant here.  Powers reported by PowerSort are cached in aux the first
// time and cross-checked on every recomputation.
class FullStackView final : public StackView {
  public:
    FullStackView(std::uint64_t region_len, TraceSink* trace)
        : region_len_(region_len), trace_(trace) {}

    std::vector<RunEntry>& stack() { return stack_; }

    RunEntry& at_depth(int depth) {
        assert(depth >= 1 && static_cast<std::size_t>(depth) <= stack_.size());
        return stack_[stack_.size() - static_cast<std::size_t>(depth)];
    }

    std::uint64_t region_len() const override { return region_len_; }
    std::uint64_t top_start() const override { return stack_.back().start; }
    bool known(int depth) const override {
        return static_cast<std::size_t>(depth) <= stack_.size();
    }
    std::uint64_t len(int depth) const override {
        return const_cast<FullStackView*>(this)->at_depth(depth).len;
    }
    bool exists(int depth) const override {
        return static_cast<std::size_t>(depth) <= stack_.size();
    }
    std::optional<std::uint64_t> probe(int depth, std::uint64_t) override {
        assert(exists(depth));
        return at_depth(depth).len;
    }
    void report_power(int depth, int power) override {
        RunEntry& e = at_depth(depth);
        if (e.aux < 0)
            e.aux = power;
        else if (e.aux != power && trace_)
            ++trace_->power_violations;
    }

  private:
    std::vector<RunEntry> stack_;
    std::uint64_t region_len_;
    TraceSink* trace_;
};

}  // namespace detail

template <class T, class Cmp, class M>
void sort_standard(std::span<T> a, Cmp cmp, const PolicyId& policy,
                   MergeKind kind, M& m, TraceSink* trace = nullptr) {
    const std::size_t n = a.size();
    if (n < 2) return;

    detail::FullStackView view(n, trace);
    std::vector<RunEntry>& stack = view.stack();
    std::vector<T> scratch;

    auto merge_at = [&](int depth) {
        RunEntry& left = view.at_depth(depth + 1);
        RunEntry& right = view.at_depth(depth);
        if (trace) trace->on_merge(left.start, left.len, right.len);
        RunEntry merged = merge_adjacent(a, cmp, left, right, kind, m, &scratch);
        // The merged run keeps the higher run's label and, when powers are in
        // play, the lower constituent's position extends it leftward without
        // changing the surviving power (so the right run's cached aux stays).
        merged.aux = right.aux;
        left = merged;
        stack.erase(stack.end() - depth);
    };

    std::size_t pos = 0;
    while (pos < n) {
        RunEntry run = detect_next_run(a, cmp, pos, n, m);
        pos = run.end();
        stack.push_back(run);
        m.observe_depth(stack.size());
        if (trace) trace->on_push_height(stack.size());
        while (true) {
            PolicyDecision d = policy_step(policy, view);
            if (d.is_stop()) break;
            merge_at(d.merge_depth);
        }
    }
    if (trace) trace->mark_main_loop_done();
    while (stack.size() > 1) merge_at(1);
}

}  // namespace shallowsort
