// Strictly in-place engine that never walks: short runs are partitioned to
// the back of the array and sorted there; the policy runs over the long-run
// prefix with a capacity-k window whose evicted entries carry their length
// in an in-array bit encoding.  Surfacing a run decodes the tag, reverses
// the encoding and jumps to the run's start.  Not stable: the encodings
// permute equal-keyed cells.
#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "shallowsort/encoding.hpp"
#include "shallowsort/engine_walkback.hpp"
#include "shallowsort/merge.hpp"
#include "shallowsort/metrics.hpp"
#include "shallowsort/partition.hpp"
#include "shallowsort/policy.hpp"
#include "shallowsort/runs.hpp"
#include "shallowsort/trace.hpp"

namespace shallowsort {

namespace detail {

// The window always holds the top min(k, live) runs: every merge is followed
// by a decode of the next deeper run, so probes never walk and never fail.
template <class T, class Cmp, class M>
class JumpbackView final : public StackView {
  public:
    JumpbackView(std::span<T> region, Cmp cmp, ShallowStack& st,
                 const MarkerPair<T>& markers, std::uint64_t lambda, M& m)
        : a_(region), cmp_(cmp), st_(st), markers_(markers), lambda_(lambda),
          m_(m) {}

    std::uint64_t region_len() const override { return a_.size(); }
    std::uint64_t top_start() const override { return st_.at_depth(1).start; }
    bool known(int depth) const override { return depth <= st_.count; }
    std::uint64_t len(int depth) const override {
        return st_.at_depth(depth).len;
    }
    bool exists(int depth) const override {
        if (depth <= st_.count) return true;
        assert(depth == st_.count + 1);
        return st_.deepest().start > 0;
    }
    std::optional<std::uint64_t> probe(int depth, std::uint64_t) override {
        assert(depth <= st_.count);  // eager refill keeps the window full
        return st_.at_depth(depth).len;
    }

    void evict_deepest() {
        encode_run_length(a_, st_.deepest(), lambda_, markers_, cmp_, m_);
    }
    void surface_one() {
        const std::size_t boundary = st_.deepest().start;
        DecodedTag tag = decode_run_length(std::span<const T>(a_), boundary,
                                           0, lambda_, cmp_, m_);
        reverse_encoding(a_, boundary - tag.len, tag.len, tag.marker_scheme,
                         lambda_, cmp_, m_);
        st_.insert_bottom(
            RunEntry{boundary - static_cast<std::size_t>(tag.len),
                     static_cast<std::size_t>(tag.len)});
    }
    void refill() {
        while (st_.count < st_.capacity && st_.deepest().start > 0)
            surface_one();
    }

  private:
    std::span<T> a_;
    Cmp cmp_;
    ShallowStack& st_;
    MarkerPair<T> markers_;
    std::uint64_t lambda_;
    M& m_;
};

}  // namespace detail

template <class T, class Cmp, class M>
void sort_jumpback(std::span<T> a, Cmp cmp, const PolicyId& policy,
                   MergeKind kind, M& m, TraceSink* trace = nullptr) {
    const std::size_t n = a.size();
    if (trace) trace->long_region_len = 0;
    if (n < 2) return;

    const Lambda lam = Lambda::for_size(n);
    normalize_runs(a, cmp, m);

    if (n <= 8 * lam.lambda) {  // tag geometry needs room; just sort outright
        bottom_up_inplace_sort(a, cmp, m);
        return;
    }

    auto markers = find_markers(std::span<const T>(a), cmp, m);
    if (!markers) return;  // every element equal: already sorted

    PartitionResult part =
        partition_short_runs(a, cmp, lam.short_threshold, m);
    const std::size_t long_len = part.long_region_len;
    if (trace) trace->long_region_len = long_len;
    std::span<T> tail = a.subspan(long_len);
    if (long_len == 0) {
        bottom_up_inplace_sort(a, cmp, m);
        return;
    }
    bottom_up_inplace_sort(tail, cmp, m);

    // policy over the long-run prefix
    std::span<T> region = a.subspan(0, long_len);
    ShallowStack st;
    st.capacity = policy_capacity(policy);
    detail::JumpbackView<T, Cmp, M> view(region, cmp, st, *markers,
                                         lam.lambda, m);
    std::vector<T> scratch;

    std::size_t pos = 0;
    while (pos < long_len) {
        RunEntry run = detect_next_run(region, cmp, pos, long_len, m);
        pos = run.end();
        if (st.count == st.capacity) view.evict_deepest();
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
                merge_adjacent(region, cmp, left, right, kind, m, &scratch);
            merged.aux = right.aux;
            st.fuse(depth, merged);
            view.refill();
            m.observe_depth(st.count);
        }
    }
    if (trace) trace->mark_main_loop_done();
    while (st.count > 1 || st.deepest().start > 0) {
        if (st.count < 2) view.surface_one();
        RunEntry left = st.at_depth(2);
        RunEntry right = st.at_depth(1);
        if (trace) trace->on_merge(left.start, left.len, right.len);
        RunEntry merged =
            merge_adjacent(region, cmp, left, right, kind, m, &scratch);
        st.fuse(1, merged);
        view.refill();
    }

    if (long_len < n)  // fold the sorted short-run tail back in
        merge_adjacent(a, cmp, RunEntry{0, long_len},
                       RunEntry{long_len, n - long_len},
                       MergeKind::InPlaceRotation, m);
}

}  // namespace shallowsort
