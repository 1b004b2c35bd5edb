// Benchmark input families.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shallowsort::bench {

enum class Family {
    UniformRandom,
    Sorted,
    Reversed,
    FewDistinct,
    RunProfile,
    CounterexampleA,
    CounterexampleB,
};

struct InputSpec {
    Family family = Family::UniformRandom;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t alphabet = 8;               // FewDistinct
    std::vector<std::uint64_t> profile;       // RunProfile

    std::string family_name() const;
};

// Deterministic for a fixed spec.  Counterexample and profile families emit
// values increasing within each run with a strict descent at every boundary,
// and the construction is checked against detect_runs before returning.
// Throws std::invalid_argument on divisibility violations.
std::vector<std::int64_t> generate(const InputSpec& spec);

// The intended run decompositions of the constructed families.
std::vector<std::uint64_t> counterexample_a_profile(std::uint64_t n);
std::vector<std::uint64_t> counterexample_b_profile(std::uint64_t n);

// Values realizing an arbitrary run-length profile.
std::vector<std::int64_t> values_for_profile(
    const std::vector<std::uint64_t>& profile);

Family family_from_name(const std::string& name);

}  // namespace shallowsort::bench
