// Run detection and backward run scans.
//
// A run is a maximal non-decreasing stretch of the array once every maximal
// strictly decreasing stretch has been reversed in place.  After that
// normalization every run boundary is a strict descent, which is what lets a
// backward scan rediscover a run from its right end alone.
#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shallowsort/metrics.hpp"

namespace shallowsort {

struct RunEntry {
    std::size_t start = 0;
    std::size_t len = 0;
    int aux = -1;  // policy-private slot (PowerSort caches a power here)

    std::size_t end() const { return start + len; }
    friend bool operator==(const RunEntry&, const RunEntry&) = default;
};

namespace detail {

template <class T, class Cmp, class M>
void reverse_span(std::span<T> a, std::size_t lo, std::size_t hi, M& m) {
    while (lo + 1 < hi) {
        std::swap(a[lo], a[hi - 1]);
        m.on_move(2);
        ++lo;
        --hi;
    }
}

}  // namespace detail

// Detects the run starting at `from`, flipping it first if it starts out
// strictly decreasing.  A flipped run is then extended further right if the
// following elements continue it, so the returned boundary is always a
// strict descent (or the region end).
template <class T, class Cmp, class M>
RunEntry detect_next_run(std::span<T> a, Cmp cmp, std::size_t from,
                         std::size_t end, M& m) {
    assert(from < end && end <= a.size());
    std::size_t i = from + 1;
    if (i < end) {
        m.on_comparison();
        if (cmp(a[i], a[i - 1])) {  // strictly decreasing start
            ++i;
            while (i < end) {
                m.on_comparison();
                if (!cmp(a[i], a[i - 1])) break;
                ++i;
            }
            detail::reverse_span<T, Cmp>(a, from, i, m);
        }
    }
    // extend the (now non-decreasing) run as far as it goes
    while (i < end) {
        m.on_comparison();
        if (cmp(a[i], a[i - 1])) break;
        ++i;
    }
    return RunEntry{from, i - from};
}

// Full decomposition; reverses decreasing runs in place as it goes.
template <class T, class Cmp, class M>
std::vector<RunEntry> detect_runs(std::span<T> a, Cmp cmp, M& m) {
    std::vector<RunEntry> runs;
    std::size_t pos = 0;
    while (pos < a.size()) {
        RunEntry r = detect_next_run(a, cmp, pos, a.size(), m);
        pos = r.end();
        runs.push_back(r);
    }
    return runs;
}

template <class T, class Cmp>
std::vector<RunEntry> detect_runs(std::span<T> a, Cmp cmp) {
    NullMetrics m;
    return detect_runs(a, cmp, m);
}

// One pass that only performs the flips; run table is discarded.
template <class T, class Cmp, class M>
void normalize_runs(std::span<T> a, Cmp cmp, M& m) {
    std::size_t pos = 0;
    while (pos < a.size()) pos = detect_next_run(a, cmp, pos, a.size(), m).end();
}

// Walks left from end_exclusive-1 towards `base` until the run's start is
// confirmed (strict descent below it, or `base` itself), inspecting at most
// `budget` elements.  An exhausted budget yields nullopt and no state is
// kept; the next probe starts over.  Inspections are charged to
// walkback_steps, the element comparisons to comparisons.
template <class T, class Cmp, class M>
std::optional<std::size_t> scan_run_leftward(std::span<T> a, Cmp cmp,
                                             std::size_t base,
                                             std::size_t end_exclusive,
                                             std::uint64_t budget, M& m) {
    assert(base < end_exclusive && end_exclusive <= a.size());
    assert(budget >= 1);
    std::size_t i = end_exclusive - 1;
    std::uint64_t inspected = 1;  // the run's last element
    std::optional<std::size_t> found;
    while (true) {
        if (i == base) {
            found = end_exclusive - base;
            break;
        }
        if (inspected >= budget) break;  // exceeded
        ++inspected;
        m.on_comparison();
        if (cmp(a[i], a[i - 1])) {  // descent: run starts at i
            found = end_exclusive - i;
            break;
        }
        --i;
    }
    m.on_walk(inspected);
    return found;
}

}  // namespace shallowsort
