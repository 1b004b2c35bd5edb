// Trial records and their CSV form.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace shallowsort::bench {

struct TrialRecord {
    std::string algorithm;
    std::string engine;
    std::string family;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t moves = 0;
    std::uint64_t walkback_steps = 0;
    std::uint64_t encode_ops = 0;
    std::uint64_t decode_ops = 0;
    std::uint64_t max_stack_depth = 0;
    std::uint64_t merge_cost = 0;
    std::uint64_t wall_ns = 0;
    double entropy = 0.0;
    std::uint64_t run_count = 0;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Header plus one row per record, columns in declared order, '.' decimal
// separator, doubles printed so they reparse exactly.
void report_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void report_csv(const std::vector<TrialRecord>& records,
                const std::string& path);

std::vector<TrialRecord> parse_csv(std::istream& in);

}  // namespace shallowsort::bench
