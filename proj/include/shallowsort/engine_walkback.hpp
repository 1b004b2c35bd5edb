// Strictly in-place engine: a capacity-k window of the topmost runs plus the
// processed-prefix index.  Forgotten lengths are recovered by walking
// backwards from the deepest known run's start; policy probes carry the
// policy's own step budget, recovery of runs in between is outright.  A run
// found by a probe is kept (it fits the window by construction); an exceeded
// probe keeps nothing.
#pragma once

#include <array>
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

inline constexpr int kMaxShallowCapacity = 4;

// entries[0] is the deepest known run, entries[count-1] the topmost.
struct ShallowStack {
    std::array<RunEntry, kMaxShallowCapacity> entries{};
    int count = 0;
    int capacity = kMaxShallowCapacity;
    std::size_t base = 0;  // left edge of the region being sorted

    RunEntry& at_depth(int depth) {
        assert(depth >= 1 && depth <= count);
        return entries[static_cast<std::size_t>(count - depth)];
    }
    const RunEntry& at_depth(int depth) const {
        assert(depth >= 1 && depth <= count);
        return entries[static_cast<std::size_t>(count - depth)];
    }
    RunEntry& deepest() { return entries[0]; }

    void push_top(const RunEntry& r) {
        if (count == capacity) {  // forget the deepest run
            for (int i = 1; i < count; ++i) entries[i - 1] = entries[i];
            --count;
        }
        entries[count++] = r;
    }
    void insert_bottom(const RunEntry& r) {
        assert(count < capacity);
        for (int i = count; i > 0; --i) entries[i] = entries[i - 1];
        entries[0] = r;
        ++count;
    }
    // merge runs at depths depth+1 and depth into one entry
    void fuse(int depth, const RunEntry& merged) {
        at_depth(depth + 1) = merged;
        for (int i = count - depth; i < count - 1; ++i)
            entries[i] = entries[i + 1];
        --count;
    }
};

namespace detail {

template <class T, class Cmp, class M>
class WalkbackView final : public StackView {
  public:
    WalkbackView(std::span<T> a, Cmp cmp, ShallowStack& st, M& m)
        : a_(a), cmp_(cmp), st_(st), m_(m) {}

    std::uint64_t region_len() const override { return a_.size() - st_.base; }
    std::uint64_t top_start() const override {
        return st_.at_depth(1).start - st_.base;
    }
    bool known(int depth) const override { return depth <= st_.count; }
    std::uint64_t len(int depth) const override {
        return st_.at_depth(depth).len;
    }
    bool exists(int depth) const override {
        if (depth <= st_.count) return true;
        assert(depth == st_.count + 1);
        return st_.deepest().start > st_.base;
    }
    std::optional<std::uint64_t> probe(int depth,
                                       std::uint64_t budget) override {
        assert(depth <= st_.capacity);
        // runs between the window and the target are recovered outright
        while (st_.count < depth - 1) {
            if (!recover_one(kUnbounded)) return std::nullopt;
        }
        if (depth <= st_.count) return st_.at_depth(depth).len;
        assert(st_.deepest().start > st_.base);
        return recover_one(budget)
                   ? std::optional<std::uint64_t>(st_.at_depth(depth).len)
                   : std::nullopt;
    }
    void report_power(int depth, int power) override {
        RunEntry& e = st_.at_depth(depth);
        if (e.aux < 0) e.aux = power;
    }

    // Unbounded variant used by the collapse phase.
    bool recover_one(std::uint64_t budget) {
        auto found = scan_run_leftward(a_, cmp_, st_.base, st_.deepest().start,
                                       budget, m_);
        if (!found) return false;
        st_.insert_bottom(RunEntry{st_.deepest().start - *found, *found});
        return true;
    }

  private:
    std::span<T> a_;
    Cmp cmp_;
    ShallowStack& st_;
    M& m_;
};

}  // namespace detail

// Collapse phase: merge the top two runs until one spans the region,
// recovering forgotten runs with unbounded backward scans as the window
// empties.
template <class T, class Cmp, class M>
void collapse_walkback(std::span<T> a, Cmp cmp, ShallowStack& st,
                       MergeKind kind, M& m, TraceSink* trace = nullptr,
                       std::vector<T>* scratch = nullptr) {
    detail::WalkbackView<T, Cmp, M> view(a, cmp, st, m);
    while (true) {
        if (st.count < 2) {
            if (st.count == 0 || st.deepest().start == st.base) return;
            view.recover_one(kUnbounded);
        }
        RunEntry left = st.at_depth(2);
        RunEntry right = st.at_depth(1);
        if (trace) trace->on_merge(left.start, left.len, right.len);
        RunEntry merged = merge_adjacent(a, cmp, left, right, kind, m, scratch);
        st.fuse(1, merged);
    }
}

template <class T, class Cmp, class M>
void sort_walkback(std::span<T> a, Cmp cmp, const PolicyId& policy,
                   MergeKind kind, M& m, TraceSink* trace = nullptr) {
    const std::size_t n = a.size();
    if (n < 2) return;

    ShallowStack st;
    st.capacity = policy_capacity(policy);
    detail::WalkbackView<T, Cmp, M> view(a, cmp, st, m);
    std::vector<T> scratch;

    std::size_t pos = 0;
    while (pos < n) {
        RunEntry run = detect_next_run(a, cmp, pos, n, m);
        pos = run.end();
        st.push_top(run);
        m.observe_depth(st.count);
        if (trace) trace->on_push_height(st.count);
        while (true) {
            PolicyDecision d = policy_step(policy, view);
            if (d.is_stop()) break;
            const int depth = d.merge_depth;
            RunEntry left = st.at_depth(depth + 1);
            RunEntry right = st.at_depth(depth);
            if (trace) trace->on_merge(left.start, left.len, right.len);
            RunEntry merged =
                merge_adjacent(a, cmp, left, right, kind, m, &scratch);
            merged.aux = right.aux;
            st.fuse(depth, merged);
            m.observe_depth(st.count);
        }
    }
    if (trace) trace->mark_main_loop_done();
    collapse_walkback(a, cmp, st, kind, m, trace, &scratch);
}

}  // namespace shallowsort
