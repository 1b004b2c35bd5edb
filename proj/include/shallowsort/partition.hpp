// In-place partition that moves every element belonging to a short run
// (length <= threshold) behind the elements of long runs.  Long-run elements
// keep their relative order; short-run element order is not preserved.
//
// Two pointers sweep the array once.  Runs are classified lazily as each
// pointer reaches them, so no run table is kept: a run is scanned at most
// twice across the whole pass.  Element reads stay under 4n (two per
// comparison plus two per swap) and swaps under n.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

namespace shallowsort {

struct PartitionResult {
    std::size_t long_region_len = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
};

template <class T, class Cmp, class M>
PartitionResult partition_short_runs(std::span<T> a, Cmp cmp,
                                     std::size_t threshold, M& m) {
    const std::size_t n = a.size();
    PartitionResult res;

    // End of the run starting at s, reading original (untouched) cells only.
    auto run_end = [&](std::size_t s) {
        std::size_t e = s + 1;
        while (e < n) {
            ++res.comparisons;
            m.on_comparison();
            if (cmp(a[e], a[e - 1])) break;
            ++e;
        }
        return e;
    };

    // Leading long runs are already in place; stop at the first short run.
    std::size_t i = 0;
    std::size_t first_short_end = n;
    while (i < n) {
        std::size_t e = run_end(i);
        if (e - i <= threshold) {
            first_short_end = e;
            break;
        }
        i = e;
    }
    if (i == n) {
        res.long_region_len = n;
        return res;
    }

    // From here the cells in [i, j) are all short-run elements; j walks the
    // untouched tail classifying runs and hands long cells forward one swap
    // at a time, which preserves their order.
    std::size_t j = first_short_end;
    while (j < n) {
        std::size_t e = run_end(j);
        if (e - j <= threshold) {
            j = e;
            continue;
        }
        while (j < e) {
            std::swap(a[i], a[j]);
            ++res.swaps;
            m.on_move(2);
            ++i;
            ++j;
        }
    }
    res.long_region_len = i;
    return res;
}

}  // namespace shallowsort
