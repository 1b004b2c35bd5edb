#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "shallowsort/merge.hpp"
#include "shallowsort/metrics.hpp"

using namespace shallowsort;

namespace {

const std::less<int> kLess{};

std::vector<int> merged_copy(std::vector<int> v, std::size_t split,
                             MergeKind kind, Metrics& m) {
    merge_adjacent(std::span<int>(v), kLess, RunEntry{0, split},
                   RunEntry{split, v.size() - split}, kind, m);
    return v;
}

// two-finger oracle over separate vectors
std::vector<int> oracle_merge(const std::vector<int>& l,
                              const std::vector<int>& r) {
    std::vector<int> out;
    std::merge(l.begin(), l.end(), r.begin(), r.end(),
               std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("merge_adjacent basic example") {
    Metrics m;
    CHECK(merged_copy({1, 3, 2, 4}, 2, MergeKind::Buffered, m) ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(merged_copy({1, 3, 2, 4}, 2, MergeKind::InPlaceRotation, m) ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(m.merge_cost == 8);
    CHECK(m.merges == 2);
}

TEST_CASE("both kernels are stable") {
    struct E {
        int key;
        int tag;
    };
    auto less = [](const E& a, const E& b) { return a.key < b.key; };
    for (MergeKind kind : {MergeKind::Buffered, MergeKind::InPlaceRotation}) {
        std::vector<E> v{{1, 0}, {1, 1}, {1, 2}, {1, 3}};
        Metrics m;
        merge_adjacent(std::span<E>(v), less, RunEntry{0, 2}, RunEntry{2, 2},
                       kind, m);
        for (int i = 0; i < 4; ++i) CHECK(v[i].tag == i);
    }
}

TEST_CASE("random (7,9) pair matches the buffered oracle under both kinds") {
    std::mt19937_64 rng(123);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> l(7), r(9);
        for (auto& x : l) x = static_cast<int>(rng() % 10);
        for (auto& x : r) x = static_cast<int>(rng() % 10);
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        std::vector<int> v = l;
        v.insert(v.end(), r.begin(), r.end());
        auto want = oracle_merge(l, r);
        Metrics m;
        CHECK(merged_copy(v, 7, MergeKind::Buffered, m) == want);
        CHECK(merged_copy(v, 7, MergeKind::InPlaceRotation, m) == want);
    }
}

TEST_CASE("kernel equivalence on random adjacent-sorted pairs") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10000; ++t) {
        const std::size_t ll = 1 + rng() % 512, rl = 1 + rng() % 512;
        const int alphabet = t % 2 ? 5 : 1000;  // duplicate-heavy half the time
        std::vector<int> v(ll + rl);
        for (auto& x : v) x = static_cast<int>(rng() % alphabet);
        std::sort(v.begin(), v.begin() + ll);
        std::sort(v.begin() + ll, v.end());
        Metrics mb, mr;
        auto a = merged_copy(v, ll, MergeKind::Buffered, mb);
        auto b = merged_copy(v, ll, MergeKind::InPlaceRotation, mr);
        REQUIRE(a == b);
        REQUIRE(std::is_sorted(a.begin(), a.end()));
        // buffered comparison bound
        REQUIRE(mb.merge_comparisons <= ll + rl - 1);
    }
}

TEST_CASE("bottom_up_inplace_sort sorts with O(1) cells") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> v(rng() % 600);
        for (auto& x : v) x = static_cast<int>(rng() % 50);
        auto want = v;
        std::sort(want.begin(), want.end());
        Metrics m;
        bottom_up_inplace_sort(std::span<int>(v), kLess, m);
        CHECK(v == want);
    }
}
