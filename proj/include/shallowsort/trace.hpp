// Optional per-sort instrumentation: the merge trace, stack-height samples,
// and PowerSort power-recomputation cross-checks.  Engines take a nullable
// pointer so benchmark runs pay nothing for it.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace shallowsort {

struct MergeRecord {
    std::size_t left_start = 0;
    std::size_t left_len = 0;
    std::size_t right_len = 0;

    friend bool operator==(const MergeRecord&, const MergeRecord&) = default;
};

struct TraceSink {
    std::vector<MergeRecord> merges;
    std::size_t main_loop_merges = 0;  // merges before the collapse phase
    std::vector<std::uint32_t> height_history;  // stack size after each push

    // jump-back only: how much of the array the policy actually ran over
    std::size_t long_region_len = SIZE_MAX;

    // count of PowerSort power recomputations that disagreed with the value
    // cached when the power was first assigned
    std::uint64_t power_violations = 0;

    void on_merge(std::size_t left_start, std::size_t left_len,
                  std::size_t right_len) {
        merges.push_back({left_start, left_len, right_len});
    }
    void mark_main_loop_done() { main_loop_merges = merges.size(); }
    void on_push_height(std::size_t h) {
        height_history.push_back(static_cast<std::uint32_t>(h));
    }
};

}  // namespace shallowsort
