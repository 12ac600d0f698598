#include "qweight/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "qweight/ame.hpp"
#include "qweight/bounds.hpp"
#include "qweight/bundled.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/io.hpp"
#include "qweight/lp.hpp"
#include "qweight/transforms.hpp"

namespace qweight {
namespace {

class Recorder {
 public:
  explicit Recorder(ReproduceReport& report) : report_(report) {}

  void expect(bool ok, const std::string& what) {
    report_.lines.push_back((ok ? "ok       " : "MISMATCH ") + what);
    if (!ok) {
      report_.matched = false;
      report_.mismatches.push_back(what);
    }
  }

  template <typename T>
  void expect_equal(const T& got, const T& want, const std::string& what) {
    const bool ok = got == want;
    expect(ok, what + " = " + to_string(got) + (ok ? "" : " (expected " + to_string(want) + ")"));
  }

  void note(const std::string& line) { report_.lines.push_back("         " + line); }

 private:
  ReproduceReport& report_;
};

Json bundled_json(const std::string& name) { return Json::parse(bundled_file(name)); }

void reproduce_table(const std::string& name, ReproduceReport& report) {
  Recorder rec(report);
  const Json table = bundled_json("tables/" + name + ".json");
  const MixedState state = state_from_json(bundled_json(table.at("state").get<std::string>()));
  const DimensionSpec& spec = state.spec();
  const Operand op = state;

  const auto [a, b] = shor_laflamme_profiles(op, op);
  const auto [ap, bp] = unitary_profiles(op, op);
  const EnumeratorProfile s = shadow_profile_brute(op, op);
  const CalligraphicTable cal = calligraphic_profile(op, op);

  const std::map<std::string, const EnumeratorProfile*> families{
      {"A", &a}, {"B", &b}, {"S", &s}, {"A'", &ap}, {"B'", &bp}};

  std::vector<bool> covered(a.size(), false);
  for (const auto& row : table.at("rows")) {
    const DimensionMultiset v = multiset_from_json(row.at("multiset"));
    covered[a.lattice().index_of(v)] = true;
    for (const auto& [key, profile] : families) {
      rec.expect_equal(profile->at(v), parse_rational(row.at(key).get<std::string>()), key + v.to_string());
    }
    for (const auto& sites : row.at("subsets")) {
      std::vector<int> zero_based;
      for (const auto& site : sites) {
        zero_based.push_back(site.get<int>() - 1);
      }
      const IndexSubset subset = IndexSubset::from_sites(zero_based);
      if (!(spec.multiset_of(subset) == v)) {
        rec.expect(false, "subset " + subset.to_string() + " does not realise " + v.to_string());
        continue;
      }
      rec.expect_equal(cal.a_at(subset), parse_rational(row.at("calA'").get<std::string>()),
                       "calA'" + subset.to_string());
      rec.expect_equal(cal.b_at(subset), parse_rational(row.at("calB'").get<std::string>()),
                       "calB'" + subset.to_string());
    }
  }
  rec.expect(std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }),
             "table lists every sub-multiset of " + spec.multiset().to_string());

  rec.expect(ame_verify(state).is_ame, "state is absolutely maximally entangled");
  rec.expect(ame_a_profile(spec).values().size() == a.size() &&
                 std::equal(a.values().begin(), a.values().end(), ame_a_profile(spec).values().begin()),
             "A matches the closed-form AME profile");
  rec.expect(std::equal(ap.values().begin(), ap.values().end(), ame_unitary_profile(spec).values().begin()),
             "A' matches the closed-form AME profile");
  rec.expect(std::equal(s.values().begin(), s.values().end(), ame_shadow_profile(spec).values().begin()),
             "S matches the closed-form AME profile");
  rec.expect(b_from_a(a).values().size() == b.size() &&
                 std::equal(b.values().begin(), b.values().end(), b_from_a(a).values().begin()),
             "B equals the transform of A");
  rec.expect(std::equal(s.values().begin(), s.values().end(), s_from_a(a).values().begin()),
             "S equals the transform of A");
  rec.expect(std::equal(ap.values().begin(), ap.values().end(), a_unitary_from_a(a).values().begin()),
             "A' equals the transform of A");

  if (table.contains("grid")) {
    const GridSolution grid = grid_from_json(bundled_json(table.at("grid").get<std::string>()));
    bool valid = true;
    try {
      validate_grid(grid);
    } catch (const std::invalid_argument& e) {
      valid = false;
      rec.note(e.what());
    }
    rec.expect(valid, "reference grid satisfies the grid rules");
    if (valid) {
      const MixedState from_grid = grid_to_state(grid);
      rec.expect((from_grid.amplitudes() - state.amplitudes()).cwiseAbs().maxCoeff() < 1e-12,
                 "reference grid reproduces the state");
    }
  }

  Json artifact = Json::object();
  artifact["dims"] = spec_to_json(spec);
  artifact["profiles"] = Json::array();
  for (const auto* p : {&a, &b, &ap, &bp, &s}) {
    artifact["profiles"].push_back(profile_to_json(*p));
  }
  artifact["calligraphic"] = calligraphic_to_json(cal);
  report.artifacts.emplace_back(name + ".json", artifact.dump(1) + "\n");
}

void reproduce_heatmap(int d_small, int d_large, int forbidden_total, ReproduceReport& report) {
  Recorder rec(report);
  const auto cells = ame_scan(d_small, d_large, 13);
  int forbidden = 0;
  for (const auto& cell : cells) {
    forbidden += cell.status == CellStatus::Forbidden ? 1 : 0;
    const std::string where = "(" + std::to_string(cell.n_small) + "," + std::to_string(cell.n_large) + ")";
    if (cell.n_small + cell.n_large == forbidden_total) {
      rec.expect(cell.status == CellStatus::Forbidden, "cell " + where + " with " + std::to_string(forbidden_total) +
                                                           " parties is forbidden");
    }
    if (cell.scott_forbidden && !cell.witness) {
      rec.note("discrepancy at " + where + ": Scott forbids the cell, the shadow test does not");
    }
    if (cell.annotated == CellStatus::KnownExists) {
      rec.expect(cell.status != CellStatus::Forbidden, "annotated existing state at " + where + " is not forbidden");
    }
  }
  rec.note(std::to_string(forbidden) + " of " + std::to_string(cells.size()) + " cells forbidden");
  report.artifacts.emplace_back("heatmap" + std::to_string(d_small) + std::to_string(d_large) + ".csv",
                                heatmap_csv(cells));
}

void reproduce_hamming(ReproduceReport& report) {
  Recorder rec(report);
  for (int d = 5; d <= 12; ++d) {
    rec.expect_equal(hamming_max_k(DimensionSpec{2, 2, d}, 2), Integer(4 * d / 7),
                     "hamming_max_k([2,2," + std::to_string(d) + "], 2)");
  }
  rec.expect_equal(max_correctable_threshold(5), Integer(2), "largest correctable threshold for D=5");
}

void reproduce_singleton(ReproduceReport& report) {
  Recorder rec(report);
  const DimensionSpec spec{2, 2, 5};
  const SingletonBound bound = singleton_max_k(spec, 5);
  rec.expect_equal(bound.max_k, Integer(5), "Singleton max K for [2,2,5], D=5");
  rec.note("minimising partition " + bound.w1.to_string() + " + " + bound.w2.to_string() + " + " + bound.w3.to_string());
  rec.expect_equal(pure_singleton_max_k(spec, 5), Integer(1), "pure Singleton max K for [2,2,5], D=5");
  const CodeLp pure_lp = build_lp({spec, 2, 5, true});
  const LpVerdict pure = solve_feasibility(pure_lp);
  rec.expect(!pure.feasible && pure.gap.has_value(), "pure ((2,2,5),2,5) LP infeasible with a verified certificate");
  const CodeLp impure_lp = build_lp({spec, 2, 5, false});
  const LpVerdict impure = solve_feasibility(impure_lp);
  rec.expect(impure.feasible && satisfies(impure_lp.program, impure.point), "impure ((2,2,5),2,5) LP feasible");
  report.artifacts.emplace_back("lp_pure.json", lp_verdict_to_json(pure_lp, pure).dump(1) + "\n");
  report.artifacts.emplace_back("lp_impure.json", lp_verdict_to_json(impure_lp, impure).dump(1) + "\n");
}

void reproduce_scott(ReproduceReport& report) {
  Recorder rec(report);
  const DimensionSpec spec{2, 2, 2, 2, 2, 2, 2, 3};
  const auto verdicts = scott_check(spec);
  bool found = false;
  for (const auto& v : verdicts) {
    if (v.witness_multisets[0] == DimensionMultiset(std::map<int, int>{{2, 5}}) && v.witness_multisets[1] == DimensionMultiset(std::map<int, int>{{2, 6}})) {
      found = true;
      rec.expect(!v.holds, "Scott pair {2^5} < {2^6} fails for seven qubits and a qutrit");
      rec.expect_equal(v.lhs, make_rational(29, 3), "left-hand side");
      rec.expect_equal(v.rhs, make_rational(10), "right-hand side");
    }
  }
  rec.expect(found, "pair {2^5} < {2^6} is admissible");
  for (const long d : {2L, 3L}) {
    rec.expect(scott_homogeneous_max_n(d, true) == 2 * (d * d - 1),
               "largest even n allowed for local dimension " + std::to_string(d));
    rec.expect(scott_homogeneous_max_n(d, false) == 2 * d * (d + 1) - 1,
               "largest odd n allowed for local dimension " + std::to_string(d));
  }
}

void reproduce_shadow_empty(ReproduceReport& report) {
  Recorder rec(report);
  const DimensionSpec spec{2, 2, 2, 3};
  rec.expect_equal(ame_shadow_empty(spec), make_rational(-1, 6), "S_{} for [2,2,2,3] (alternating sum)");
  rec.expect_equal(ame_shadow_profile(spec)[0], make_rational(-1, 6), "S_{} for [2,2,2,3] (shadow kernel)");
}

const std::vector<std::pair<std::string, std::function<void(ReproduceReport&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(ReproduceReport&)>>> targets{
      {"tab:AME2333", [](ReproduceReport& r) { reproduce_table("ame2333", r); }},
      {"tab:AME234", [](ReproduceReport& r) { reproduce_table("ame234", r); }},
      {"tab:AME223", [](ReproduceReport& r) { reproduce_table("ame223", r); }},
      {"tab:AME233", [](ReproduceReport& r) { reproduce_table("ame233", r); }},
      {"tab:AME334", [](ReproduceReport& r) { reproduce_table("ame334", r); }},
      {"tab:AME344", [](ReproduceReport& r) { reproduce_table("ame344", r); }},
      {"fig:heatmap23", [](ReproduceReport& r) { reproduce_heatmap(2, 3, 8, r); }},
      {"fig:heatmap34", [](ReproduceReport& r) { reproduce_heatmap(3, 4, 12, r); }},
      {"ex:hamming", reproduce_hamming},
      {"ex:singleton", reproduce_singleton},
      {"ex:scott", reproduce_scott},
      {"ex:shadow_empty", reproduce_shadow_empty},
  };
  return targets;
}

}  // namespace

std::vector<std::string> reproduce_targets() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) {
    names.push_back(name);
  }
  return names;
}

ReproduceReport reproduce(std::string_view target) {
  for (const auto& [name, fn] : registry()) {
    if (name == target) {
      ReproduceReport report;
      report.target = name;
      const auto start = std::chrono::steady_clock::now();
      fn(report);
      report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return report;
    }
  }
  throw std::invalid_argument("unknown reproduce target: " + std::string(target));
}

}  // namespace qweight
