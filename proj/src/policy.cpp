#include "shallowsort/policy.hpp"

#include <bit>
#include <cassert>
#include <cmath>

namespace shallowsort {

namespace {

using u64 = std::uint64_t;

u64 ceil_mul(double factor, u64 r) {
    return static_cast<u64>(std::ceil(static_cast<long double>(factor) *
                                      static_cast<long double>(r)));
}

bool less_than_scaled(u64 lhs, double factor, u64 rhs) {
    return static_cast<long double>(lhs) <
           static_cast<long double>(factor) * static_cast<long double>(rhs);
}

u64 ceil_div(u64 a, u64 b) { return (a + b - 1) / b; }

// Run geometry helpers for PowerSort.  Depths 1..3 are known when called.
u64 start_of(const StackView& v, int depth) {
    u64 s = v.top_start();
    for (int d = 2; d <= depth; ++d) s -= v.len(d);
    return s;
}

u64 mid_x2(const StackView& v, int depth) {
    return 2 * start_of(v, depth) + v.len(depth);
}

}  // namespace

int policy_capacity(const PolicyId& p) {
    switch (p.kind) {
        case PolicyKind::Shivers:
        case PolicyKind::AlphaStack:
            return 2;
        case PolicyKind::PowerSort:
        case PolicyKind::CAdaptiveShivers:
        case PolicyKind::TwoMerge:
            return 3;
        case PolicyKind::TimSort:
        case PolicyKind::OriginalTimSort:
        case PolicyKind::AlphaMerge:
            return 4;
    }
    return 4;
}

int node_power(u64 mid_left_x2, u64 mid_right_x2, u64 n) {
    assert(mid_left_x2 < mid_right_x2 && mid_right_x2 <= 2 * n);
    // Smallest p whose n/2^p grid separates the two midpoints, minus one.
    using u128 = unsigned __int128;
    const u128 l = mid_left_x2, r = mid_right_x2, den = 2 * n;
    int p = 0;
    while ((l << p) / den == (r << p) / den) ++p;
    return p - 1;
}

int shivers_level(u64 r, double c) {
    assert(r >= 1);
    if (c == 1.0) return std::bit_width(r) - 1;
    return std::ilogbl(static_cast<long double>(r) /
                       static_cast<long double>(c));
}

namespace {

// --- PowerSort ------------------------------------------------------------
// Merge R3,R2 while p3 > p2.  r2 is always known (only R3,R2 merges occur);
// the r3 probe budget comes from the stopping rule "r3 >= n/2^p2 implies
// p3 <= p2", with one step of slack.
PolicyDecision power_sort_step(StackView& v) {
    if (!v.exists(2)) return PolicyDecision::stop();
    assert(v.known(2));
    const u64 n = v.region_len();
    const int p2 = node_power(mid_x2(v, 2), mid_x2(v, 1), n);
    v.report_power(2, p2);
    if (!v.exists(3)) return PolicyDecision::stop();
    const u64 budget = ceil_div(n, u64{1} << p2) + 1;
    if (!v.probe(3, budget)) return PolicyDecision::stop();
    const int p3 = node_power(mid_x2(v, 3), mid_x2(v, 2), n);
    v.report_power(3, p3);
    return p3 > p2 ? PolicyDecision::merge_at(2) : PolicyDecision::stop();
}

// --- c-Adaptive ShiversSort -------------------------------------------------
// Merge R3,R2 while |S| >= 3 and l3 <= max(l2, l1).  r2 is always known.
// Stopping rule: r3 > 2*max(r1,r2) implies l3 > max(l1,l2).
PolicyDecision c_adaptive_shivers_step(StackView& v, double c) {
    if (!v.exists(2)) return PolicyDecision::stop();
    assert(v.known(2));
    if (!v.exists(3)) return PolicyDecision::stop();
    const u64 r1 = v.len(1), r2 = v.len(2);
    const u64 budget = 2 * std::max(r1, r2) + 1;
    auto r3 = v.probe(3, budget);
    if (!r3) return PolicyDecision::stop();
    const int l1 = shivers_level(r1, c);
    const int l2 = shivers_level(r2, c);
    const int l3 = shivers_level(*r3, c);
    return l3 <= std::max(l1, l2) ? PolicyDecision::merge_at(2)
                                  : PolicyDecision::stop();
}

// --- ShiversSort ------------------------------------------------------------
// Merge R2,R1 while 2^floor(log r2) <= r1; the probe stops after 2*r1 steps.
PolicyDecision shivers_step(StackView& v) {
    if (!v.exists(2)) return PolicyDecision::stop();
    const u64 r1 = v.len(1);
    auto r2 = v.probe(2, 2 * r1);
    if (!r2) return PolicyDecision::stop();
    const u64 rounded = u64{1} << shivers_level(*r2, 1.0);
    return rounded <= r1 ? PolicyDecision::merge_at(1) : PolicyDecision::stop();
}

// --- alpha-StackSort ---------------------------------------------------------
// Merge R2,R1 while r2 < alpha*r1.
PolicyDecision alpha_stack_step(StackView& v, double alpha) {
    if (!v.exists(2)) return PolicyDecision::stop();
    const u64 r1 = v.len(1);
    auto r2 = v.probe(2, ceil_mul(alpha, r1));
    if (!r2) return PolicyDecision::stop();
    return less_than_scaled(*r2, alpha, r1) ? PolicyDecision::merge_at(1)
                                            : PolicyDecision::stop();
}

// --- 2-MergeSort -------------------------------------------------------------
// While |S| >= 3 and r2 < 2*r1: merge R3,R2 if r3 < r1, else R2,R1.
PolicyDecision two_merge_step(StackView& v) {
    if (!v.exists(2)) return PolicyDecision::stop();
    const u64 r1 = v.len(1);
    auto r2 = v.probe(2, 2 * r1);
    if (!r2) return PolicyDecision::stop();
    if (!v.exists(3)) return PolicyDecision::stop();
    if (!(*r2 < 2 * r1)) return PolicyDecision::stop();
    auto r3 = v.probe(3, r1);
    if (r3 && *r3 < r1) return PolicyDecision::merge_at(2);
    return PolicyDecision::merge_at(1);
}

// --- TimSort family ----------------------------------------------------------
// Conditions in published order.  Locating R3 means fully recovering r2, for
// which no stopping rule exists; the target scans use budget r1 (#1),
// r1+r2+1 (#3) and r2+r3+1 (#4).  Each failed target scan starts over.
PolicyDecision timsort_step(StackView& v, bool with_fourth_rule) {
    if (!v.exists(2)) return PolicyDecision::stop();
    const u64 r1 = v.len(1);
    const u64 r2 = *v.probe(2, kUnbounded);
    const bool s3 = v.exists(3);  // |S| > 2

    if (s3) {  // #1: |S| > 3 and r1 > r3
        auto r3 = v.probe(3, r1);
        if (r3 && r1 > *r3 && v.exists(4)) return PolicyDecision::merge_at(2);
    }
    if (s3 && r1 >= r2) return PolicyDecision::merge_at(1);  // #2

    std::optional<u64> r3;
    if (s3) {  // #3: |S| > 3 and r1 + r2 >= r3
        r3 = v.known(3) ? std::optional<u64>(v.len(3))
                        : v.probe(3, r1 + r2 + 1);
        if (r3 && v.exists(4) && r1 + r2 >= *r3)
            return PolicyDecision::merge_at(1);
    }
    if (with_fourth_rule && s3) {  // #4: |S| > 4 and r2 + r3 >= r4
        if (!r3) r3 = v.probe(3, kUnbounded);
        if (v.exists(4)) {
            auto r4 = v.probe(4, r2 + *r3 + 1);
            if (r4 && v.exists(5) && r2 + *r3 >= *r4)
                return PolicyDecision::merge_at(1);
        }
    }
    return PolicyDecision::stop();
}

// --- alpha-MergeSort ---------------------------------------------------------
// While r2 < alpha*r1 or r3 < alpha*r2: merge R3,R2 if r3 < r1, else R2,R1.
// The second disjunct needs r2's value, so a failed first probe forces a
// full recovery; that unbounded step is what breaks walkability.
PolicyDecision alpha_merge_step(StackView& v, double alpha) {
    if (!v.exists(2)) return PolicyDecision::stop();
    const u64 r1 = v.len(1);
    auto pr2 = v.probe(2, ceil_mul(alpha, r1));
    if (pr2 && less_than_scaled(*pr2, alpha, r1)) {
        if (v.exists(3)) {
            auto r3 = v.probe(3, r1);
            if (r3 && *r3 < r1) return PolicyDecision::merge_at(2);
        }
        return PolicyDecision::merge_at(1);
    }
    const u64 r2 = pr2 ? *pr2 : *v.probe(2, kUnbounded);
    if (!v.exists(3)) return PolicyDecision::stop();
    auto r3 = v.probe(3, ceil_mul(alpha, r2));
    if (!(r3 && less_than_scaled(*r3, alpha, r2))) return PolicyDecision::stop();
    return *r3 < r1 ? PolicyDecision::merge_at(2) : PolicyDecision::merge_at(1);
}

}  // namespace

PolicyDecision policy_step(const PolicyId& policy, StackView& view) {
    switch (policy.kind) {
        case PolicyKind::PowerSort:
            return power_sort_step(view);
        case PolicyKind::CAdaptiveShivers:
            return c_adaptive_shivers_step(view, policy.c);
        case PolicyKind::Shivers:
            return shivers_step(view);
        case PolicyKind::AlphaStack:
            return alpha_stack_step(view, policy.alpha);
        case PolicyKind::TwoMerge:
            return two_merge_step(view);
        case PolicyKind::TimSort:
            return timsort_step(view, true);
        case PolicyKind::OriginalTimSort:
            return timsort_step(view, false);
        case PolicyKind::AlphaMerge:
            return alpha_merge_step(view, policy.alpha);
    }
    return PolicyDecision::stop();
}

}  // namespace shallowsort
