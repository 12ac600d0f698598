// Thin bindings over the C++ library. Structured values cross the boundary
// as JSON text so exact rationals survive as "p/q" strings; the Python
// package turns them into fractions.Fraction.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qweight/ame.hpp"
#include "qweight/bounds.hpp"
#include "qweight/bundled.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/io.hpp"
#include "qweight/lp.hpp"
#include "qweight/parallel.hpp"
#include "qweight/reproduce.hpp"
#include "qweight/transforms.hpp"

namespace py = pybind11;
using namespace qweight;

namespace {

std::string dump(const Json& j) { return j.dump(); }

MixedState parse_state(const std::string& state_json) { return state_from_json(Json::parse(state_json)); }

std::string enumerate(const std::string& state_json, const std::string& family) {
  const Operand op = parse_state(state_json);
  if (family == "calligraphic") {
    return dump(calligraphic_to_json(calligraphic_profile(op, op)));
  }
  switch (parse_family(family)) {
    case Family::A:
      return dump(profile_to_json(shor_laflamme_profiles(op, op).first));
    case Family::B:
      return dump(profile_to_json(shor_laflamme_profiles(op, op).second));
    case Family::APrime:
      return dump(profile_to_json(unitary_profiles(op, op).first));
    case Family::BPrime:
      return dump(profile_to_json(unitary_profiles(op, op).second));
    case Family::S:
      return dump(profile_to_json(shadow_profile_brute(op, op)));
  }
  throw std::invalid_argument("unknown family " + family);
}

std::string transform(const std::string& profile_json, const std::string& target) {
  return dump(profile_to_json(transform_to(profile_from_json(Json::parse(profile_json)), parse_family(target))));
}

std::string bounds(const std::vector<int>& dims, const std::string& distance) {
  const DimensionSpec spec(dims);
  const Integer d(distance);
  const Integer t = max_correctable_threshold(d);
  return dump({{"hamming_threshold", to_string(t)},
               {"hamming_max_k", to_string(hamming_max_k(spec, t))},
               {"singleton_max_k", to_string(singleton_max_k(spec, d).max_k)},
               {"pure_singleton_max_k", to_string(pure_singleton_max_k(spec, d))}});
}

CodeParams code_params(const std::vector<int>& dims, const std::string& k, const std::string& distance, bool pure) {
  CodeParams params{DimensionSpec(dims), Integer(k), Integer(distance), pure};
  params.validate();
  return params;
}

std::string check_bounds(const std::vector<int>& dims, const std::string& k, const std::string& distance, bool pure) {
  const CodeParams params = code_params(dims, k, distance, pure);
  Json out = Json::array({verdict_to_json(hamming_check(params)), verdict_to_json(singleton_check(params))});
  if (pure) {
    out.push_back(verdict_to_json(pure_singleton_check(params)));
  }
  return dump(out);
}

std::string scott(const std::vector<int>& dims) {
  Json out = Json::array();
  for (const auto& v : scott_check(DimensionSpec(dims))) {
    out.push_back(verdict_to_json(v));
  }
  return dump(out);
}

std::string lp(const std::vector<int>& dims, const std::string& k, const std::string& distance, bool pure,
               const std::string& maximize_json) {
  const CodeLp program = build_lp(code_params(dims, k, distance, pure));
  const LpVerdict verdict = maximize_json.empty()
                                ? solve_feasibility(program)
                                : maximize(program, multiset_from_json(Json::parse(maximize_json)));
  return dump(lp_verdict_to_json(program, verdict));
}

std::string lp_text(const std::vector<int>& dims, const std::string& k, const std::string& distance, bool pure) {
  return emit_lp(build_lp(code_params(dims, k, distance, pure)));
}

std::string closed_form(const std::vector<int>& dims, const std::string& family) {
  const DimensionSpec spec(dims);
  switch (parse_family(family)) {
    case Family::A:
      return dump(profile_to_json(ame_a_profile(spec)));
    case Family::B:
      return dump(profile_to_json(b_from_a(ame_a_profile(spec))));
    case Family::APrime:
      return dump(profile_to_json(ame_unitary_profile(spec)));
    case Family::S:
      return dump(profile_to_json(ame_shadow_profile(spec)));
    default:
      throw std::invalid_argument("no closed form for family " + family);
  }
}

std::optional<std::pair<std::string, std::string>> construct(int d1, int d2, int d3) {
  const auto grid = grid_construct(d1, d2, d3);
  if (!grid) {
    return std::nullopt;
  }
  return std::pair{dump(state_to_json(grid_to_state(*grid))), dump(grid_to_json(*grid))};
}

std::string verify(const std::string& state_json, double tolerance) {
  return dump(ame_report_to_json(ame_verify(parse_state(state_json), tolerance)));
}

std::string code_report(const std::vector<int>& dims, const ComplexMatrix& projector, const std::string& distance) {
  return dump(code_report_to_json(check_code(DensityOperator(DimensionSpec(dims), projector), Integer(distance))));
}

py::tuple run_reproduce(const std::string& target) {
  const ReproduceReport report = reproduce(target);
  return py::make_tuple(report.matched, report.lines, report.mismatches);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact weight enumerators, bounds and AME tools (JSON-level bindings).";

  m.def("set_max_threads", &set_max_threads, py::arg("threads"));
  m.def("enumerate", &enumerate, py::arg("state_json"), py::arg("family"));
  m.def("transform", &transform, py::arg("profile_json"), py::arg("target"));
  m.def(
      "kernel_csv",
      [](const std::vector<int>& dims, const std::string& kind) {
        return kernel_csv(kernel_by_kind(DimensionSpec(dims).multiset(), kind));
      },
      py::arg("dims"), py::arg("kind"));
  m.def("bounds", &bounds, py::arg("dims"), py::arg("distance"));
  m.def("check_bounds", &check_bounds, py::arg("dims"), py::arg("k"), py::arg("distance"), py::arg("pure"));
  m.def("scott", &scott, py::arg("dims"));
  m.def("scott_homogeneous_max_n", &scott_homogeneous_max_n, py::arg("d"), py::arg("even"));
  m.def("lp", &lp, py::arg("dims"), py::arg("k"), py::arg("distance"), py::arg("pure"), py::arg("maximize_json"));
  m.def("emit_lp", &lp_text, py::arg("dims"), py::arg("k"), py::arg("distance"), py::arg("pure"));
  m.def("closed_form", &closed_form, py::arg("dims"), py::arg("family"));
  m.def(
      "shadow_empty", [](const std::vector<int>& dims) { return to_string(ame_shadow_empty(DimensionSpec(dims))); },
      py::arg("dims"));
  m.def(
      "ame_scan_csv",
      [](int d_small, int d_large, int max_parties) { return heatmap_csv(ame_scan(d_small, d_large, max_parties)); },
      py::arg("d_small"), py::arg("d_large"), py::arg("max_parties"));
  m.def("ame_construct", &construct, py::arg("d1"), py::arg("d2"), py::arg("d3"));
  m.def("ame_verify", &verify, py::arg("state_json"), py::arg("tolerance"));
  m.def("check_code", &code_report, py::arg("dims"), py::arg("projector"), py::arg("distance"));
  m.def("reproduce_targets", &reproduce_targets);
  m.def("reproduce", &run_reproduce, py::arg("target"));
  m.def(
      "bundled_file", [](const std::string& name) { return std::string(bundled_file(name)); }, py::arg("name"));
  m.def("bundled_file_names", &bundled_file_names);
}
