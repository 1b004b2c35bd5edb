#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "shallowsort/bench/input.hpp"
#include "shallowsort/bench/runner.hpp"
#include "shallowsort/sort.hpp"
#include "shallowsort/verify.hpp"

using namespace shallowsort;
namespace bench = shallowsort::bench;

namespace {

const std::less<std::int64_t> kLess{};

const std::vector<PolicyId> kAllPolicies{
    PolicyId::power_sort(),   PolicyId::c_adaptive_shivers(1.0),
    PolicyId::shivers(),      PolicyId::alpha_stack(2.0),
    PolicyId::two_merge(),    PolicyId::alpha_merge(1.8),
    PolicyId::timsort(),      PolicyId::original_timsort()};

std::vector<std::int64_t> random_values(std::size_t n, int alphabet,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % alphabet);
    return v;
}

}  // namespace

TEST_CASE("already sorted input produces no merges under any policy") {
    for (const auto& p : kAllPolicies) {
        std::vector<std::int64_t> v(100);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
        Metrics m;
        TraceSink t;
        sort_standard(std::span<std::int64_t>(v), kLess, p,
                      MergeKind::Buffered, m, &t);
        CHECK(t.merges.empty());
        CHECK(m.merge_cost == 0);
        CHECK(m.max_stack_depth == 1);
    }
}

TEST_CASE("TimSort stage dynamics: the two 2-runs merge first") {
    // run lengths {32, 16, 8, 2, 2} for n = 60
    auto v = bench::values_for_profile({32, 16, 8, 2, 2});
    Metrics m;
    TraceSink t;
    sort_standard(std::span<std::int64_t>(v), kLess, PolicyId::timsort(),
                  MergeKind::Buffered, m, &t);
    REQUIRE(t.main_loop_merges == 1);
    CHECK(t.merges[0] == MergeRecord{56, 2, 2});
    CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("standard engine sorts random arrays under every policy") {
    std::mt19937_64 rng(1234);
    for (const auto& p : kAllPolicies) {
        for (int t = 0; t < 300; ++t) {
            const std::size_t n = rng() % 2048;
            auto input = random_values(n, t % 2 ? 8 : 1 << 20, rng());
            for (MergeKind k :
                 {MergeKind::Buffered, MergeKind::InPlaceRotation}) {
                auto v = input;
                Metrics m;
                sort_standard(std::span<std::int64_t>(v), kLess, p, k, m);
                CHECK(verify_sorted_permutation(
                    input, std::span<const std::int64_t>(v), kLess));
            }
        }
    }
}

TEST_CASE("all three engines are exact sorts (spot check)") {
    std::mt19937_64 rng(77);
    for (const auto& p : kAllPolicies) {
        for (Engine e : {Engine::Standard, Engine::Walkback, Engine::Jumpback}) {
            for (int t = 0; t < 40; ++t) {
                const std::size_t n = rng() % 4096;
                auto input = random_values(n, t % 2 ? 6 : 1 << 20, rng());
                auto v = input;
                Metrics m;
                sort(std::span<std::int64_t>(v), kLess, p, e,
                     MergeKind::InPlaceRotation, m);
                REQUIRE(verify_sorted_permutation(
                    input, std::span<const std::int64_t>(v), kLess));
            }
        }
    }
}

TEST_CASE("standard and walk-back sorts are stable with the buffered kernel") {
    struct E {
        int key;
        int tag;
    };
    auto less = [](const E& a, const E& b) { return a.key < b.key; };
    std::mt19937_64 rng(4242);
    for (const auto& p : kAllPolicies) {
        for (int t = 0; t < 50; ++t) {
            std::vector<E> v(500);
            for (int i = 0; i < 500; ++i)
                v[i] = {static_cast<int>(rng() % 7), i};
            auto check_stable = [&](std::vector<E> w, auto sorter) {
                Metrics m;
                sorter(std::span<E>(w), m);
                for (std::size_t i = 1; i < w.size(); ++i) {
                    CHECK(w[i - 1].key <= w[i].key);
                    if (w[i - 1].key == w[i].key)
                        CHECK(w[i - 1].tag < w[i].tag);
                }
            };
            check_stable(v, [&](std::span<E> s, Metrics& m) {
                sort_standard(s, less, p, MergeKind::Buffered, m);
            });
            check_stable(v, [&](std::span<E> s, Metrics& m) {
                sort_walkback(s, less, p, MergeKind::Buffered, m);
            });
        }
    }
}

TEST_CASE("walk-back trace equals the standard trace (spot check)") {
    for (const auto& p : kAllPolicies) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            bench::InputSpec spec;
            spec.family = bench::Family::UniformRandom;
            spec.n = 4096;
            spec.seed = seed;
            auto d = bench::compare_traces(spec, p, Engine::Standard,
                                           Engine::Walkback);
            INFO(bench::policy_name(p), " seed ", seed, ": ", d.to_string());
            CHECK(d.equal);
        }
    }
}

TEST_CASE("single-run input needs no walking") {
    std::vector<std::int64_t> v(500);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    Metrics m;
    sort_walkback(std::span<std::int64_t>(v), kLess, PolicyId::power_sort(),
                  MergeKind::InPlaceRotation, m);
    CHECK(m.walkback_steps == 0);
}

TEST_CASE("walk-back probes scan left of the deepest known run") {
    // many runs already processed left of the known window; probing the
    // next-deeper run walks backward from the deepest known start, and the
    // profile is chosen so PowerSort must probe
    auto v = bench::values_for_profile({40, 20, 10, 6, 4});
    Metrics m;
    sort_walkback(std::span<std::int64_t>(v), kLess, PolicyId::power_sort(),
                  MergeKind::Buffered, m);
    CHECK(m.walkback_steps > 0);
    CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("collapse_walkback recovers forgotten runs with unbounded scans") {
    // five live runs of length 2, window capacity 3
    auto v = bench::values_for_profile({2, 2, 2, 2, 2});
    ShallowStack st;
    st.capacity = 3;
    st.base = 0;
    st.entries[0] = RunEntry{4, 2};
    st.entries[1] = RunEntry{6, 2};
    st.entries[2] = RunEntry{8, 2};
    st.count = 3;
    Metrics m;
    TraceSink t;
    collapse_walkback(std::span<std::int64_t>(v), kLess, st,
                      MergeKind::Buffered, m, &t);
    CHECK(t.merges.size() == 4);
    CHECK(m.merges == 4);
    CHECK(m.walkback_steps == 5);  // 3 steps to recover run [2,4), 2 for [0,2)
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(st.count == 1);
    CHECK(st.entries[0] == RunEntry{0, 10});
}

TEST_CASE("collapse_walkback with a fully known stack never scans") {
    auto v = bench::values_for_profile({3, 3, 3});
    ShallowStack st;
    st.capacity = 3;
    st.entries[0] = RunEntry{0, 3};
    st.entries[1] = RunEntry{3, 3};
    st.entries[2] = RunEntry{6, 3};
    st.count = 3;
    Metrics m;
    collapse_walkback(std::span<std::int64_t>(v), kLess, st,
                      MergeKind::Buffered, m);
    CHECK(m.merges == 2);
    CHECK(m.walkback_steps == 0);
    CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("collapse_walkback is a no-op on empty or single-run stacks") {
    std::vector<std::int64_t> v{1, 2, 3};
    ShallowStack st;
    st.capacity = 3;
    st.entries[0] = RunEntry{0, 3};
    st.count = 1;
    Metrics m;
    collapse_walkback(std::span<std::int64_t>(v), kLess, st,
                      MergeKind::Buffered, m);
    CHECK(m.merges == 0);
    st.count = 0;
    collapse_walkback(std::span<std::int64_t>(v), kLess, st,
                      MergeKind::Buffered, m);
    CHECK(m.merges == 0);
}

TEST_CASE("shallow window never exceeds the policy capacity") {
    std::mt19937_64 rng(88);
    for (const auto& p : kAllPolicies) {
        for (int t = 0; t < 30; ++t) {
            auto input = random_values(2000, 9, rng());
            auto v = input;
            Metrics m;
            sort_walkback(std::span<std::int64_t>(v), kLess, p,
                          MergeKind::Buffered, m);
            CHECK(m.max_stack_depth <=
                  static_cast<std::uint64_t>(policy_capacity(p)));
        }
    }
}
