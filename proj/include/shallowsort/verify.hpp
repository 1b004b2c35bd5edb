// Post-sort checking: sortedness plus multiset equality with the input.
#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace shallowsort {

// Multiset equality is judged under the comparator (sort-and-compare against
// an oracle sort of the snapshot), so it only assumes the element contract.
template <class T, class Cmp>
bool verify_sorted_permutation(std::vector<T> before_snapshot,
                               std::span<const T> after, Cmp cmp) {
    if (before_snapshot.size() != after.size()) return false;
    for (std::size_t i = 1; i < after.size(); ++i)
        if (cmp(after[i], after[i - 1])) return false;
    std::stable_sort(before_snapshot.begin(), before_snapshot.end(), cmp);
    for (std::size_t i = 0; i < after.size(); ++i) {
        const T& x = before_snapshot[i];
        const T& y = after[i];
        if (cmp(x, y) || cmp(y, x)) return false;
    }
    return true;
}

}  // namespace shallowsort
