#include "shallowsort/bench/input.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "shallowsort/runs.hpp"

namespace shallowsort::bench {

namespace {

std::uint64_t ceil_log2(std::uint64_t n) {
    std::uint64_t k = 0;
    while ((std::uint64_t{1} << k) < n) ++k;
    return k;
}

[[noreturn]] void config_error(const std::string& what) {
    throw std::invalid_argument(what);
}

void check_profile_realized(const std::vector<std::int64_t>& values,
                            const std::vector<std::uint64_t>& profile) {
    std::vector<std::int64_t> copy = values;
    auto runs =
        detect_runs(std::span<std::int64_t>(copy), std::less<std::int64_t>{});
    bool ok = runs.size() == profile.size();
    for (std::size_t i = 0; ok && i < runs.size(); ++i)
        ok = runs[i].len == profile[i];
    if (!ok)
        throw std::logic_error("generated values do not realize the profile");
}

}  // namespace

std::string InputSpec::family_name() const {
    switch (family) {
        case Family::UniformRandom: return "uniform_random";
        case Family::Sorted: return "sorted";
        case Family::Reversed: return "reversed";
        case Family::FewDistinct:
            return "few_distinct(" + std::to_string(alphabet) + ")";
        case Family::RunProfile: return "run_profile";
        case Family::CounterexampleA: return "counterexample_a";
        case Family::CounterexampleB: return "counterexample_b";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "uniform_random" || name == "random") return Family::UniformRandom;
    if (name == "sorted") return Family::Sorted;
    if (name == "reversed") return Family::Reversed;
    if (name.rfind("few_distinct", 0) == 0) return Family::FewDistinct;
    if (name == "run_profile") return Family::RunProfile;
    if (name == "counterexample_a" || name == "ctr_a") return Family::CounterexampleA;
    if (name == "counterexample_b" || name == "ctr_b") return Family::CounterexampleB;
    config_error("unknown input family: " + name);
}

std::vector<std::int64_t> values_for_profile(
    const std::vector<std::uint64_t>& profile) {
    std::vector<std::int64_t> v;
    std::uint64_t total = 0;
    for (auto r : profile) total += r;
    v.reserve(total);
    std::int64_t next = 0;
    for (std::size_t k = 0; k < profile.size(); ++k) {
        const std::uint64_t r = profile[k];
        if (r == 0) config_error("run lengths must be positive");
        // An interior run of length 1 cannot survive normalization: together
        // with the descent on its right it reads as a decreasing run and
        // gets flipped.  Only a trailing singleton is realizable.
        if (r == 1 && k + 1 < profile.size())
            config_error("interior runs of length 1 are not realizable");
        for (std::uint64_t i = 0; i < r; ++i) v.push_back(next++);
        next -= 2;  // next run starts strictly below the last value
    }
    return v;
}

std::vector<std::uint64_t> counterexample_a_profile(std::uint64_t n) {
    if (n == 0 || n % 16 != 0)
        config_error("counterexample_a needs n divisible by 16");
    std::vector<std::uint64_t> p{n / 2, n / 4, n / 8};
    for (std::uint64_t i = 0; i < n / 16; ++i) p.push_back(2);
    return p;
}

std::vector<std::uint64_t> counterexample_b_profile(std::uint64_t n) {
    // Same three leading runs; the 2-runs are thinned to n/(16*ceil(log2 n))
    // (rounded down) and the leftovers are absorbed into one closing run,
    // which keeps the entropy constant.
    if (n == 0 || n % 8 != 0)
        config_error("counterexample_b needs n divisible by 8");
    const std::uint64_t logn = ceil_log2(n);
    const std::uint64_t pairs = n / (16 * logn);
    if (pairs == 0) config_error("counterexample_b needs n >= 16*ceil(log2 n)");
    const std::uint64_t rest = n / 8 - 2 * pairs;
    if (rest < 2) config_error("counterexample_b remainder run too small");
    std::vector<std::uint64_t> p{n / 2, n / 4, n / 8};
    for (std::uint64_t i = 0; i < pairs; ++i) p.push_back(2);
    p.push_back(rest);
    return p;
}

std::vector<std::int64_t> generate(const InputSpec& spec) {
    const std::uint64_t n = spec.n;
    std::vector<std::int64_t> v;
    switch (spec.family) {
        case Family::UniformRandom: {
            v.resize(n);
            std::iota(v.begin(), v.end(), std::int64_t{0});
            std::mt19937_64 rng(spec.seed);
            std::shuffle(v.begin(), v.end(), rng);
            return v;
        }
        case Family::Sorted: {
            v.resize(n);
            std::iota(v.begin(), v.end(), std::int64_t{0});
            return v;
        }
        case Family::Reversed: {
            v.resize(n);
            for (std::uint64_t i = 0; i < n; ++i)
                v[i] = static_cast<std::int64_t>(n - i);
            return v;
        }
        case Family::FewDistinct: {
            if (spec.alphabet == 0) config_error("alphabet must be positive");
            v.resize(n);
            std::mt19937_64 rng(spec.seed);
            std::uniform_int_distribution<std::int64_t> dist(
                0, static_cast<std::int64_t>(spec.alphabet) - 1);
            for (auto& x : v) x = dist(rng);
            return v;
        }
        case Family::RunProfile: {
            std::uint64_t total = 0;
            for (auto r : spec.profile) total += r;
            if (spec.profile.empty() || total != n)
                config_error("run profile must be nonempty and sum to n");
            v = values_for_profile(spec.profile);
            check_profile_realized(v, spec.profile);
            return v;
        }
        case Family::CounterexampleA: {
            auto p = counterexample_a_profile(n);
            v = values_for_profile(p);
            check_profile_realized(v, p);
            return v;
        }
        case Family::CounterexampleB: {
            auto p = counterexample_b_profile(n);
            v = values_for_profile(p);
            check_profile_realized(v, p);
            return v;
        }
    }
    config_error("unknown family");
}

}  // namespace shallowsort::bench
