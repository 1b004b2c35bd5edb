// Merge policies as pure decision procedures over a probe interface.
//
// A policy never touches elements.  It sees the stack through a StackView:
// the top run's length and start are free, deeper lengths are obtained by
// probing with a step budget.  A probe that would exceed its budget reports
// so, and the policy interprets that as the corresponding length comparison
// being false; the budgets below are chosen so that this is always sound.
// Engines differ only in how the view answers probes (full stack: from the
// stack; walk-back: backward scans; jump-back: decoded entries).
#pragma once

#include <cstdint>
#include <optional>

namespace shallowsort {

// probe budget meaning "walk as far as it takes"
inline constexpr std::uint64_t kUnbounded = UINT64_MAX;

enum class PolicyKind {
    PowerSort,
    CAdaptiveShivers,  // parameter c > 0
    Shivers,
    AlphaStack,  // parameter alpha > 1
    TwoMerge,
    AlphaMerge,  // parameter alpha > 1
    TimSort,
    OriginalTimSort,
};

struct PolicyId {
    PolicyKind kind = PolicyKind::PowerSort;
    double c = 1.0;      // CAdaptiveShivers
    double alpha = 2.0;  // AlphaStack / AlphaMerge

    static PolicyId power_sort() { return {PolicyKind::PowerSort}; }
    static PolicyId c_adaptive_shivers(double c = 1.0) {
        return {PolicyKind::CAdaptiveShivers, c};
    }
    static PolicyId shivers() { return {PolicyKind::Shivers}; }
    static PolicyId alpha_stack(double alpha = 2.0) {
        return {PolicyKind::AlphaStack, 1.0, alpha};
    }
    static PolicyId two_merge() { return {PolicyKind::TwoMerge}; }
    static PolicyId alpha_merge(double alpha = 1.8) {
        return {PolicyKind::AlphaMerge, 1.0, alpha};
    }
    static PolicyId timsort() { return {PolicyKind::TimSort}; }
    static PolicyId original_timsort() { return {PolicyKind::OriginalTimSort}; }
};

// Shallow-stack capacity the policy needs: the deepest run it ever probes.
int policy_capacity(const PolicyId& p);

struct PolicyDecision {
    // depth 0 = stop; depth d >= 1 merges the runs at depths d+1 and d
    // (MergeAt(2) merges R3,R2; MergeAt(1) merges R2,R1).
    int merge_depth = 0;

    static PolicyDecision stop() { return {0}; }
    static PolicyDecision merge_at(int d) { return {d}; }
    bool is_stop() const { return merge_depth == 0; }
    friend bool operator==(const PolicyDecision&, const PolicyDecision&) =
        default;
};

// Read access to the top of the run stack.  Depth 1 is the topmost run.
// Contracts (asserted by implementations):
//   - known(1) always holds; len(d) requires known(d);
//   - exists(d) requires runs 1..d-1 known;
//   - probe(d, budget) requires that the run exists; intermediate runs are
//     recovered outright, only the target scan is budget-limited.
// probe returns the length, or nullopt when the budget was exhausted first.
class StackView {
  public:
    virtual ~StackView() = default;
    virtual std::uint64_t region_len() const = 0;  // n for powers and budgets
    virtual std::uint64_t top_start() const = 0;   // region-relative
    virtual bool known(int depth) const = 0;
    virtual std::uint64_t len(int depth) const = 0;
    virtual bool exists(int depth) const = 0;
    virtual std::optional<std::uint64_t> probe(int depth,
                                               std::uint64_t budget) = 0;
    // Lets the engine cross-check recomputed PowerSort powers against their
    // first-assigned values; the default ignores the report.
    virtual void report_power(int /*depth*/, int /*power*/) {}
};

// Minimum depth of the tree node lying strictly right of mid_left and at or
// left of mid_right, midpoints doubled to stay integral.  Root depth is 0.
int node_power(std::uint64_t mid_left_x2, std::uint64_t mid_right_x2,
               std::uint64_t n);

// floor(log2(r / c)); negative when r < c.
int shivers_level(std::uint64_t r, double c);

// One decision of the named policy, matching the published condition order.
PolicyDecision policy_step(const PolicyId& policy, StackView& view);

}  // namespace shallowsort
