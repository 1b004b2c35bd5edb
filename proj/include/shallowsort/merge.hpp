// Stable merging of two adjacent sorted subarrays.
//
// Buffered: classic two-finger merge through a scratch copy of the smaller
// side; linear time, at most left+right-1 comparisons.
//
// InPlaceRotation: symmetric merge (binary-search split + three-reversal
// block rotation).  O(1) auxiliary element cells; the recursion halves the
// span so the integer state is bounded by log2 of the span.  Moves carry a
// log factor, which is the price of the in-place kernel.
#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "shallowsort/metrics.hpp"
#include "shallowsort/runs.hpp"

namespace shallowsort {

enum class MergeKind { Buffered, InPlaceRotation };

namespace detail {

template <class T, class Cmp, class M>
void merge_buffered(std::span<T> a, Cmp cmp, std::size_t lo, std::size_t mid,
                    std::size_t hi, M& m, std::vector<T>& scratch) {
    const std::size_t ll = mid - lo, rl = hi - mid;
    auto comp = [&](const T& x, const T& y) {
        m.on_comparison();
        m.on_merge_comparison();
        return cmp(x, y);
    };
    if (ll <= rl) {
        scratch.assign(a.begin() + lo, a.begin() + mid);
        m.on_move(ll);
        std::size_t i = 0, j = mid, o = lo;
        while (i < ll && j < hi) {
            if (comp(a[j], scratch[i]))
                a[o++] = a[j++];
            else
                a[o++] = scratch[i++];  // ties take the left element
            m.on_move();
        }
        while (i < ll) {
            a[o++] = scratch[i++];
            m.on_move();
        }
    } else {
        scratch.assign(a.begin() + mid, a.begin() + hi);
        m.on_move(rl);
        std::size_t i = mid, j = rl, o = hi;
        while (lo < i && 0 < j) {
            if (comp(scratch[j - 1], a[i - 1]))
                a[--o] = a[--i];  // left strictly greater goes high
            else
                a[--o] = scratch[--j];  // ties keep the right element high
            m.on_move();
        }
        while (0 < j) {
            a[--o] = scratch[--j];
            m.on_move();
        }
    }
}

// rotate [lo,hi) so that the block starting at mid comes first
template <class T, class M>
void rotate_blocks(std::span<T> a, std::size_t lo, std::size_t mid,
                   std::size_t hi, M& m) {
    auto rev = [&](std::size_t l, std::size_t h) {
        while (l + 1 < h) {
            std::swap(a[l], a[h - 1]);
            m.on_move(2);
            ++l;
            --h;
        }
    };
    rev(lo, mid);
    rev(mid, hi);
    rev(lo, hi);
}

// SymMerge after Kim & Kutzner, following the shape of Go's sort.symMerge.
template <class T, class Cmp, class M>
void symmerge(std::span<T> a, Cmp cmp, std::size_t lo, std::size_t mid,
              std::size_t hi, M& m) {
    auto comp = [&](const T& x, const T& y) {
        m.on_comparison();
        m.on_merge_comparison();
        return cmp(x, y);
    };
    if (mid - lo == 0 || hi - mid == 0) return;
    if (mid - lo == 1) {
        // lower bound: the left element slides in front of equal rights
        std::size_t i = mid, j = hi;
        while (i < j) {
            std::size_t h = (i + j) / 2;
            if (comp(a[h], a[lo]))
                i = h + 1;
            else
                j = h;
        }
        rotate_blocks(a, lo, lo + 1, i, m);
        return;
    }
    if (hi - mid == 1) {
        // upper bound: the right element lands behind equal lefts
        std::size_t i = lo, j = mid;
        while (i < j) {
            std::size_t h = (i + j) / 2;
            if (!comp(a[mid], a[h]))
                i = h + 1;
            else
                j = h;
        }
        rotate_blocks(a, i, mid, mid + 1, m);
        return;
    }

    const std::size_t half = (lo + hi) / 2;
    const std::size_t pivot = half + mid;
    std::size_t start, r;
    if (mid > half) {
        start = pivot - hi;
        r = half;
    } else {
        start = lo;
        r = mid;
    }
    const std::size_t p = pivot - 1;
    while (start < r) {
        std::size_t c = (start + r) / 2;
        if (!comp(a[p - c], a[c]))
            start = c + 1;
        else
            r = c;
    }
    const std::size_t end = pivot - start;
    if (start < mid && mid < end) rotate_blocks(a, start, mid, end, m);
    if (lo < start && start < half) symmerge(a, cmp, lo, start, half, m);
    if (half < end && end < hi) symmerge(a, cmp, half, end, hi, m);
}

}  // namespace detail

// Merges the two adjacent runs and returns the combined entry.  Both kinds
// are stable.  `scratch` backs the Buffered kind and may be shared across
// calls; the rotation kind never touches it.
template <class T, class Cmp, class M>
RunEntry merge_adjacent(std::span<T> a, Cmp cmp, RunEntry left, RunEntry right,
                        MergeKind kind, M& m,
                        std::vector<T>* scratch = nullptr) {
    assert(left.end() == right.start && right.end() <= a.size());
    m.on_merge(left.len + right.len);
    if (kind == MergeKind::Buffered) {
        std::vector<T> local;
        std::vector<T>& buf = scratch ? *scratch : local;
        detail::merge_buffered(a, cmp, left.start, right.start, right.end(), m,
                               buf);
    } else {
        detail::symmerge(a, cmp, left.start, right.start, right.end(), m);
    }
    return RunEntry{left.start, left.len + right.len};
}

// Plain bottom-up mergesort over fixed-width blocks with the rotation
// kernel; used for the jump-back engine's short-run tail and its small-array
// fallback.  O(1) auxiliary cells.
template <class T, class Cmp, class M>
void bottom_up_inplace_sort(std::span<T> a, Cmp cmp, M& m) {
    const std::size_t n = a.size();
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            merge_adjacent(a, cmp, RunEntry{lo, width},
                           RunEntry{mid, hi - mid}, MergeKind::InPlaceRotation,
                           m);
        }
    }
}

}  // namespace shallowsort
