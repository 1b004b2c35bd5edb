// Python bindings for the sorting engines and the input generators.
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>

#include "shallowsort/bench/input.hpp"
#include "shallowsort/bench/runner.hpp"
#include "shallowsort/entropy.hpp"
#include "shallowsort/sort.hpp"
#include "shallowsort/verify.hpp"

namespace py = pybind11;
namespace bench = shallowsort::bench;

namespace {

using Array = py::array_t<std::int64_t, py::array::c_style>;

std::span<std::int64_t> writable_span(Array& arr) {
    if (arr.ndim() != 1) throw py::value_error("expected a 1-d int64 array");
    return {arr.mutable_data(), static_cast<std::size_t>(arr.size())};
}

shallowsort::PolicyId make_policy(const std::string& name, double c,
                                  double alpha) {
    if (alpha <= 0) alpha = name == "alpha_merge" ? 1.8 : 2.0;
    return bench::policy_from_name(name, c, alpha);
}

py::dict metrics_dict(const shallowsort::Metrics& m) {
    py::dict d;
    d["comparisons"] = m.comparisons;
    d["moves"] = m.moves;
    d["walkback_steps"] = m.walkback_steps;
    d["encode_ops"] = m.encode_ops;
    d["decode_ops"] = m.decode_ops;
    d["max_stack_depth"] = m.max_stack_depth;
    d["merge_cost"] = m.merge_cost;
    d["merges"] = m.merges;
    return d;
}

py::dict sort_in_place(Array arr, const std::string& policy,
                       const std::string& engine, const std::string& kernel,
                       double c, double alpha) {
    auto span = writable_span(arr);
    const auto eng = bench::engine_from_name(engine);
    const auto kind = kernel == "auto" ? bench::natural_kind(eng)
                                       : bench::kind_from_name(kernel);
    shallowsort::Metrics m;
    shallowsort::sort(span, make_policy(policy, c, alpha), eng, kind, m);
    return metrics_dict(m);
}

py::dict trace(Array arr, const std::string& policy, const std::string& engine,
               const std::string& kernel, double c, double alpha) {
    std::vector<std::int64_t> copy(arr.data(), arr.data() + arr.size());
    const auto eng = bench::engine_from_name(engine);
    const auto kind = kernel == "auto" ? bench::natural_kind(eng)
                                       : bench::kind_from_name(kernel);
    shallowsort::Metrics m;
    shallowsort::TraceSink t;
    shallowsort::sort(std::span<std::int64_t>(copy),
                      std::less<std::int64_t>{}, make_policy(policy, c, alpha),
                      eng, kind, m, &t);
    py::list merges;
    for (const auto& r : t.merges)
        merges.append(py::make_tuple(r.left_start, r.left_len, r.right_len));
    py::dict d;
    d["merges"] = merges;
    d["main_loop_merges"] = t.main_loop_merges;
    if (t.long_region_len != SIZE_MAX) d["long_region_len"] = t.long_region_len;
    d["metrics"] = metrics_dict(m);
    return d;
}

py::list detect_runs_py(Array arr) {
    auto span = writable_span(arr);
    auto runs = shallowsort::detect_runs(span, std::less<std::int64_t>{});
    py::list out;
    for (const auto& r : runs) out.append(py::make_tuple(r.start, r.len));
    return out;
}

Array generate_py(const std::string& family, std::uint64_t n,
                  std::uint64_t seed, std::uint64_t alphabet,
                  const std::vector<std::uint64_t>& profile) {
    bench::InputSpec spec;
    spec.family = bench::family_from_name(family);
    spec.n = n;
    spec.seed = seed;
    spec.alphabet = alphabet;
    spec.profile = profile;
    if (spec.family == bench::Family::RunProfile && spec.n == 0)
        for (auto r : profile) spec.n += r;
    auto v = bench::generate(spec);
    Array out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

bool verify_py(Array before, Array after) {
    std::vector<std::int64_t> snapshot(before.data(),
                                       before.data() + before.size());
    return shallowsort::verify_sorted_permutation(
        snapshot,
        std::span<const std::int64_t>(after.data(),
                                      static_cast<std::size_t>(after.size())),
        std::less<std::int64_t>{});
}

}  // namespace

PYBIND11_MODULE(_shallowsort, m) {
    m.doc() = "Stack-based natural mergesorts with strictly in-place "
              "walk-back and jump-back engines";

    m.def("sort_in_place", &sort_in_place, py::arg("array"),
          py::arg("policy") = "powersort", py::arg("engine") = "standard",
          py::arg("kernel") = "auto", py::arg("c") = 1.0,
          py::arg("alpha") = 0.0,
          "Sort a 1-d int64 numpy array in place; returns the counters.");
    m.def("trace", &trace, py::arg("array"), py::arg("policy") = "powersort",
          py::arg("engine") = "standard", py::arg("kernel") = "auto",
          py::arg("c") = 1.0, py::arg("alpha") = 0.0,
          "Sort a copy and return its merge trace and counters.");
    m.def("detect_runs", &detect_runs_py, py::arg("array"),
          "Normalize descending runs in place and return (start, len) pairs.");
    m.def("run_entropy",
          [](const std::vector<std::uint64_t>& p) {
              return shallowsort::run_entropy(p);
          },
          py::arg("lengths"));
    m.def("node_power", &shallowsort::node_power, py::arg("mid_left_x2"),
          py::arg("mid_right_x2"), py::arg("n"));
    m.def("shivers_level", &shallowsort::shivers_level, py::arg("r"),
          py::arg("c") = 1.0);
    m.def("generate", &generate_py, py::arg("family"), py::arg("n") = 0,
          py::arg("seed") = 0, py::arg("alphabet") = 8,
          py::arg("profile") = std::vector<std::uint64_t>{});
    m.def("verify_sorted_permutation", &verify_py, py::arg("before"),
          py::arg("after"));

    m.attr("POLICIES") =
        py::make_tuple("powersort", "c_adaptive_shivers", "shivers",
                       "alpha_stack", "two_merge", "alpha_merge", "timsort",
                       "original_timsort");
    m.attr("ENGINES") = py::make_tuple("standard", "walkback", "jumpback");
    m.attr("KERNELS") = py::make_tuple("buffered", "rotation");
}
