#include <algorithm>
#include <climits>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "shallowsort/policy.hpp"

using namespace shallowsort;

namespace {

// Scripted full-knowledge view for direct policy_step checks.  lens[0] is
// the topmost run; every probe is answered from the script and logged.
class MockView final : public StackView {
  public:
    MockView(std::vector<std::uint64_t> lens, std::uint64_t n,
             std::uint64_t top_start)
        : lens_(std::move(lens)), n_(n), top_start_(top_start) {}

    std::vector<int> probes;

    std::uint64_t region_len() const override { return n_; }
    std::uint64_t top_start() const override { return top_start_; }
    bool known(int depth) const override {
        return static_cast<std::size_t>(depth) <= lens_.size();
    }
    std::uint64_t len(int depth) const override { return lens_[depth - 1]; }
    bool exists(int depth) const override {
        return static_cast<std::size_t>(depth) <= lens_.size();
    }
    std::optional<std::uint64_t> probe(int depth, std::uint64_t) override {
        probes.push_back(depth);
        if (!exists(depth)) return std::nullopt;
        return lens_[depth - 1];
    }

  private:
    std::vector<std::uint64_t> lens_;
    std::uint64_t n_;
    std::uint64_t top_start_;
};

std::uint64_t sum(const std::vector<std::uint64_t>& v) {
    std::uint64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

// stack arranged flush against the end of an array of length n
MockView view_of(std::vector<std::uint64_t> lens_deep_to_top, std::uint64_t n) {
    std::vector<std::uint64_t> lens(lens_deep_to_top.rbegin(),
                                    lens_deep_to_top.rend());
    const std::uint64_t top_start = n - lens[0];
    return MockView(std::move(lens), n, top_start);
}

}  // namespace

TEST_CASE("node_power examples") {
    // n=7: runs (0,2)+(2,5) straddle deeper structure than (0,2)+(2,2)
    CHECK(node_power(2, 9, 7) == 0);
    CHECK(node_power(2, 6, 7) == 1);
    // midpoints straddling the array center always give the root
    CHECK(node_power(7, 9, 8) == 0);
    CHECK(node_power(15, 17, 16) == 0);
}

TEST_CASE("node_power equals the cut-tree oracle (small n, all run pairs)") {
    for (std::uint64_t n = 2; n <= 64; ++n) {
        test_oracles::CutTree tree(n);
        for (std::uint64_t s1 = 0; s1 < n; ++s1)
            for (std::uint64_t r1 = 1; s1 + r1 <= n; ++r1)
                for (std::uint64_t r2 = 1; s1 + r1 + r2 <= n; ++r2) {
                    const std::uint64_t l = 2 * s1 + r1;
                    const std::uint64_t r = 2 * (s1 + r1) + r2;
                    auto want = tree.min_depth(l, r);
                    REQUIRE(want.has_value());
                    CHECK(node_power(l, r, n) == *want);
                }
    }
}

TEST_CASE("cut-tree oracle closed form matches the literal recursion") {
    std::mt19937_64 rng(3);
    for (std::uint64_t n = 2; n <= 48; ++n) {
        test_oracles::CutTree tree(n);
        auto cuts = tree.enumerate();
        const std::uint64_t scale = std::uint64_t{1} << tree.max_depth;
        for (int t = 0; t < 200; ++t) {
            std::uint64_t l = 1 + rng() % (2 * n - 2);
            std::uint64_t r = l + 1 + rng() % (2 * n - l - 1);
            // direct minimum over the recursively enumerated cuts
            int best = INT_MAX;
            for (auto [pos, depth] : cuts)
                if (pos > l * scale && pos <= r * scale)
                    best = std::min(best, depth);
            auto got = tree.min_depth(l, r);
            if (best == INT_MAX)
                CHECK(!got.has_value());
            else {
                REQUIRE(got.has_value());
                CHECK(*got == best);
            }
        }
    }
}

TEST_CASE("shivers_level examples") {
    CHECK(shivers_level(5, 1.0) == 2);
    CHECK(shivers_level(5, 2.0) == 1);
    CHECK(shivers_level(3, 3.0) == 0);
    CHECK(shivers_level(1, 1.0) == 0);
    CHECK(shivers_level(1, 3.0) == -2);
}

TEST_CASE("policy_step spec examples") {
    // TimSort, r1=5 >= r2=3 with three runs on the stack: rule #2 fires
    auto tim = view_of({10, 3, 5}, 64);
    CHECK(policy_step(PolicyId::timsort(), tim) == PolicyDecision::merge_at(1));

    // c-Adaptive ShiversSort, c=1
    auto cas1 = view_of({2, 2, 2}, 64);
    CHECK(policy_step(PolicyId::c_adaptive_shivers(1.0), cas1) ==
          PolicyDecision::merge_at(2));
    auto cas2 = view_of({4, 2, 2}, 64);
    CHECK(policy_step(PolicyId::c_adaptive_shivers(1.0), cas2) ==
          PolicyDecision::stop());

    // 2-MergeSort: r2 < 2*r1 and r3 < r1 merges the deeper pair
    auto tm = view_of({2, 3, 4}, 64);
    CHECK(policy_step(PolicyId::two_merge(), tm) == PolicyDecision::merge_at(2));
}

TEST_CASE("TimSort stops on strictly decreasing powers of two") {
    auto v = view_of({64, 32, 16, 8, 4, 2}, 256);
    CHECK(policy_step(PolicyId::timsort(), v) == PolicyDecision::stop());
    auto v2 = view_of({64, 32, 16, 8, 4, 2}, 256);
    CHECK(policy_step(PolicyId::original_timsort(), v2) ==
          PolicyDecision::stop());
}

TEST_CASE("policy_step is deterministic in the view's answers") {
    const std::vector<PolicyId> policies{
        PolicyId::power_sort(),   PolicyId::c_adaptive_shivers(1.0),
        PolicyId::shivers(),      PolicyId::alpha_stack(2.0),
        PolicyId::two_merge(),    PolicyId::alpha_merge(1.8),
        PolicyId::timsort(),      PolicyId::original_timsort()};
    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        std::vector<std::uint64_t> lens;
        const int k = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < k; ++i) lens.push_back(1 + rng() % 64);
        const std::uint64_t n = sum(lens) + rng() % 64;
        for (const auto& p : policies) {
            auto v1 = view_of(lens, n);
            auto v2 = view_of(lens, n);
            auto d1 = policy_step(p, v1);
            auto d2 = policy_step(p, v2);
            CHECK(d1 == d2);
            CHECK(v1.probes == v2.probes);  // same questions asked
        }
    }
}

TEST_CASE("stopping lemmas: exceeding the budget implies the check fails") {
    std::mt19937_64 rng(31);

    for (int t = 0; t < 20000; ++t) {
        // PowerSort: r3 >= n/2^p2 implies p3 <= p2
        const std::uint64_t n = 8 + rng() % 4096;
        std::uint64_t r1 = 1 + rng() % (n / 4), r2 = 1 + rng() % (n / 4),
                      r3 = 1 + rng() % (n / 4);
        if (r1 + r2 + r3 > n) continue;
        const std::uint64_t s3 = rng() % (n - r1 - r2 - r3 + 1);
        const std::uint64_t s2 = s3 + r3, s1 = s2 + r2;
        const int p2 = node_power(2 * s2 + r2, 2 * s1 + r1, n);
        const int p3 = node_power(2 * s3 + r3, 2 * s2 + r2, n);
        const std::uint64_t bound =
            (n + (std::uint64_t{1} << p2) - 1) / (std::uint64_t{1} << p2);
        if (r3 >= bound) CHECK(p3 <= p2);
    }

    for (int t = 0; t < 20000; ++t) {
        // c-Adaptive Shivers: r3 > 2*max(r1,r2) implies l3 > max(l1,l2)
        const double c = std::vector<double>{0.5, 1.0, 3.0}[t % 3];
        const std::uint64_t r1 = 1 + rng() % 1000, r2 = 1 + rng() % 1000;
        const std::uint64_t r3 = 2 * std::max(r1, r2) + 1 + rng() % 1000;
        CHECK(shivers_level(r3, c) >
              std::max(shivers_level(r1, c), shivers_level(r2, c)));
    }

    for (int t = 0; t < 20000; ++t) {
        // Shivers: r2 >= 2*r1 implies 2^floor(log r2) > r1
        const std::uint64_t r1 = 1 + rng() % 1000;
        const std::uint64_t r2 = 2 * r1 + rng() % 1000;
        CHECK((std::uint64_t{1} << shivers_level(r2, 1.0)) > r1);
    }
}
