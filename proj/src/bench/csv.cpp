#include "shallowsort/bench/records.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shallowsort::bench {

namespace {

constexpr const char* kHeader =
    "algorithm,engine,family,n,seed,comparisons,moves,walkback_steps,"
    "encode_ops,decode_ops,max_stack_depth,merge_cost,wall_ns,entropy,"
    "run_count";

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

void report_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    if (records.empty())
        throw std::invalid_argument("report_csv: no records to write");
    out << kHeader << '\n';
    for (const auto& r : records) {
        out << r.algorithm << ',' << r.engine << ',' << r.family << ',' << r.n
            << ',' << r.seed << ',' << r.comparisons << ',' << r.moves << ','
            << r.walkback_steps << ',' << r.encode_ops << ',' << r.decode_ops
            << ',' << r.max_stack_depth << ',' << r.merge_cost << ','
            << r.wall_ns << ',' << format_double(r.entropy) << ','
            << r.run_count << '\n';
    }
}

void report_csv(const std::vector<TrialRecord>& records,
                const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    report_csv(records, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<TrialRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::runtime_error("csv: missing or unexpected header");
    std::vector<TrialRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line);
        if (f.size() != 15) throw std::runtime_error("csv: bad field count");
        TrialRecord r;
        r.algorithm = f[0];
        r.engine = f[1];
        r.family = f[2];
        r.n = std::stoull(f[3]);
        r.seed = std::stoull(f[4]);
        r.comparisons = std::stoull(f[5]);
        r.moves = std::stoull(f[6]);
        r.walkback_steps = std::stoull(f[7]);
        r.encode_ops = std::stoull(f[8]);
        r.decode_ops = std::stoull(f[9]);
        r.max_stack_depth = std::stoull(f[10]);
        r.merge_cost = std::stoull(f[11]);
        r.wall_ns = std::stoull(f[12]);
        r.entropy = std::stod(f[13]);
        r.run_count = std::stoull(f[14]);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace shallowsort::bench
