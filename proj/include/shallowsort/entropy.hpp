// Run-based entropy of a run-length profile.
#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace shallowsort {

using RunProfile = std::vector<std::uint64_t>;

// H = sum (r_i/n) * log2(n/r_i), base-2 logs throughout.
inline double run_entropy(const RunProfile& profile) {
    assert(!profile.empty());
    std::uint64_t n = 0;
    for (std::uint64_t r : profile) {
        assert(r >= 1);
        n += r;
    }
    double h = 0.0;
    const double dn = static_cast<double>(n);
    for (std::uint64_t r : profile) {
        const double dr = static_cast<double>(r);
        h += (dr / dn) * std::log2(dn / dr);
    }
    return h;
}

}  // namespace shallowsort
