// Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Tolerances: enumerator values are compared exactly after snapping the
// floating-point sums to rationals (denominator <= 10^6, snap error < 1e-7);
// everything else is exact rational arithmetic. ame_verify uses 1e-9.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"
#include "../support/properties.hpp"
#include "qweight/ame.hpp"
#include "qweight/bounds.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/lp.hpp"
#include "qweight/transforms.hpp"

using namespace qweight;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && failures_.size() < 8) {
      failures_.push_back(what);
    }
    failed_ = failed_ || !condition;
    ++checks_;
  }
  Outcome outcome() const {
    std::ostringstream out;
    out << checks_ << " checks";
    for (const auto& f : failures_) {
      out << "\n      failed: " << f;
    }
    return {!failed_ && checks_ > 0, out.str()};
  }

 private:
  bool failed_ = false;
  long checks_ = 0;
  std::vector<std::string> failures_;
};

DimensionMultiset ms(std::initializer_list<int> dims) { return DimensionMultiset::from_dimensions(dims); }

DimensionSpec homogeneous(int d, int n) { return DimensionSpec(std::vector<int>(static_cast<std::size_t>(n), d)); }

Rational value_of(const Json& j) { return parse_rational(j.get<std::string>()); }

Outcome tables() {
  Checker check;
  for (const std::string name : {"ame2333", "ame234", "ame223", "ame233", "ame334", "ame344"}) {
    const Json table = fixtures::bundled_json("tables/" + name + ".json");
    const auto state = fixtures::bundled_state(name);
    const auto& spec = state.spec();
    const auto [a, b] = shor_laflamme_profiles(state, state);
    const auto [ap, bp] = unitary_profiles(state, state);
    const auto s = shadow_profile_brute(state, state);
    const auto cal = calligraphic_profile(state, state);
    std::size_t rows = 0;
    for (const auto& row : table.at("rows")) {
      ++rows;
      const auto w = multiset_from_json(row.at("multiset"));
      const std::string where = name + " " + w.to_string() + " ";
      check.expect(a.at(w) == value_of(row.at("A")), where + "A");
      check.expect(b.at(w) == value_of(row.at("B")), where + "B");
      check.expect(s.at(w) == value_of(row.at("S")), where + "S");
      check.expect(ap.at(w) == value_of(row.at("A'")), where + "A'");
      check.expect(bp.at(w) == value_of(row.at("B'")), where + "B'");
      for (const auto& subset : row.at("subsets")) {
        std::vector<int> sites;
        for (const auto& site : subset) {
          sites.push_back(site.get<int>() - 1);
        }
        const auto sub = IndexSubset::from_sites(sites);
        check.expect(spec.multiset_of(sub) == w, where + "subset realises the row");
        check.expect(cal.a_at(sub) == value_of(row.at("calA'")), where + "calA' " + sub.to_string());
        check.expect(cal.b_at(sub) == value_of(row.at("calB'")), where + "calB' " + sub.to_string());
      }
    }
    check.expect(rows == a.size(), name + " table covers every multiset");
  }
  return check.outcome();
}

Outcome shadow_example() {
  Checker check;
  const auto value = ame_shadow_profile(DimensionSpec{2, 2, 2, 3}).at({});
  check.expect(value == make_rational(-1, 6), "S_{} = " + to_string(value));
  return check.outcome();
}

Outcome scott_example() {
  Checker check;
  const DimensionSpec spec{2, 2, 2, 2, 2, 2, 2, 3};
  bool found = false;
  for (const auto& v : scott_check(spec)) {
    if (v.witness_multisets.size() == 2 && v.witness_multisets[0] == ms({2, 2, 2, 2, 2}) &&
        v.witness_multisets[1] == ms({2, 2, 2, 2, 2, 2})) {
      found = true;
      check.expect(!v.holds, "pair reported as failing");
      check.expect(v.lhs == make_rational(29, 3), "lhs " + to_string(v.lhs));
      check.expect(v.rhs == 10, "rhs " + to_string(v.rhs));
    }
  }
  check.expect(found, "pair {2^5} < {2^6} present");
  return check.outcome();
}

Outcome hamming_example() {
  Checker check;
  check.expect(hamming_max_k(DimensionSpec{2, 2, 5}, 2) == 2, "[2,2,5], T=2");
  for (int d = 5; d <= 12; ++d) {
    check.expect(hamming_max_k(DimensionSpec{2, 2, d}, 2) == (4 * d) / 7, "d=" + std::to_string(d));
  }
  return check.outcome();
}

Outcome singleton_example() {
  Checker check;
  const auto bound = singleton_max_k(DimensionSpec{2, 2, 5}, 5);
  check.expect(bound.max_k == 5, "max K = " + to_string(bound.max_k));
  check.expect(!singleton_check(CodeParams{DimensionSpec{2, 2, 5}, 6, 5, false}).holds, "K = 6 violates");
  check.expect(singleton_check(CodeParams{DimensionSpec{2, 2, 5}, 5, 5, false}).holds, "K = 5 allowed");
  check.expect(pure_singleton_max_k(DimensionSpec{2, 2, 5}, 5) == 1, "pure max K = 1");
  return check.outcome();
}

Outcome lp_verdicts() {
  Checker check;
  const CodeParams pure{DimensionSpec{2, 2, 5}, 2, 5, true};
  const auto pure_verdict = code_feasible(pure);
  check.expect(!pure_verdict.feasible, "pure code infeasible");
  check.expect(oracle::certificate_valid(build_lp(pure).program, pure_verdict.multipliers),
               "Farkas certificate verifies");
  const CodeParams impure{DimensionSpec{2, 2, 5}, 2, 5, false};
  const auto impure_verdict = code_feasible(impure);
  check.expect(impure_verdict.feasible, "impure code feasible");
  check.expect(oracle::point_valid(build_lp(impure).program, impure_verdict.point), "feasible point verifies");
  return check.outcome();
}

Outcome heatmaps() {
  Checker check;
  for (const auto& [small, large, total] : {std::tuple{2, 3, 8}, std::tuple{3, 4, 12}}) {
    int seen = 0;
    for (const auto& cell : ame_scan(small, large, 13)) {
      if (cell.n_small + cell.n_large == total) {
        ++seen;
        check.expect(cell.status == CellStatus::Forbidden, "(" + std::to_string(small) + "," + std::to_string(large) +
                                                               ") cell " + std::to_string(cell.n_small) + "," +
                                                               std::to_string(cell.n_large));
      }
    }
    check.expect(seen == total + 1, "row of total " + std::to_string(total) + " is complete");
  }
  return check.outcome();
}

Outcome homogeneous_scott() {
  Checker check;
  for (const int d : {2, 3}) {
    // Largest n of each parity allowed by scott_check, scanning well past the
    // expected boundary.
    long largest_even = 0;
    long largest_odd = 0;
    std::optional<long> first_even_forbidden;
    std::optional<long> first_odd_forbidden;
    for (int n = 2; n <= 2 * d * (d + 1) + 6; ++n) {
      const bool allowed = !scott_violation(homogeneous(d, n)).has_value();
      auto& largest = n % 2 == 0 ? largest_even : largest_odd;
      auto& first = n % 2 == 0 ? first_even_forbidden : first_odd_forbidden;
      if (allowed && !first) {
        largest = n;
      }
      if (!allowed && !first) {
        first = n;
      }
    }
    const long even_formula = 2L * (d * d - 1);
    const long odd_formula = 2L * d * (d + 1) - 1;
    const std::string tag = "D=" + std::to_string(d) + " ";
    check.expect(largest_even == even_formula, tag + "even bound " + std::to_string(largest_even));
    check.expect(largest_odd == odd_formula, tag + "odd bound " + std::to_string(largest_odd));
    check.expect(first_even_forbidden && *first_even_forbidden > even_formula, tag + "first forbidden even n");
    check.expect(first_odd_forbidden && *first_odd_forbidden > odd_formula, tag + "first forbidden odd n");
    check.expect(scott_homogeneous_max_n(d, true) == even_formula, tag + "scott_homogeneous_max_n even");
    check.expect(scott_homogeneous_max_n(d, false) == odd_formula, tag + "scott_homogeneous_max_n odd");
  }
  return check.outcome();
}

Outcome grid_pipeline() {
  Checker check;
  for (const auto& [d1, d2, d3] :
       {std::tuple{2, 2, 3}, std::tuple{2, 3, 3}, std::tuple{2, 3, 4}, std::tuple{3, 3, 4}, std::tuple{3, 4, 4}}) {
    const std::string tag = std::to_string(d1) + std::to_string(d2) + std::to_string(d3) + " ";
    const auto grid = grid_construct(d1, d2, d3);
    check.expect(grid.has_value(), tag + "grid found");
    if (!grid) {
      continue;
    }
    const auto state = grid_to_state(*grid);
    check.expect(ame_verify(state).is_ame, tag + "state is AME");
    const auto& spec = state.spec();
    const auto [a, b] = shor_laflamme_profiles(state, state);
    const auto closed_a = ame_a_profile(spec);
    check.expect(a == closed_a, tag + "A equals closed form");
    check.expect(std::equal(b.values().begin(), b.values().end(), closed_a.values().begin()), tag + "B equals closed form");
    check.expect(unitary_profiles(state, state).first == ame_unitary_profile(spec), tag + "A' equals closed form");
    check.expect(shadow_profile_brute(state, state) == ame_shadow_profile(spec), tag + "S equals closed form");
  }
  return check.outcome();
}

Outcome property_suites() {
  Checker check;
  const auto transforms = oracle::transform_properties(20240601, 60, 20, 4);
  const auto projectors = oracle::projector_properties(20240602, 50, 4);
  check.expect(transforms.cases >= 50, "at least 50 random states");
  check.expect(projectors.cases >= 50, "at least 50 random projectors");
  for (const auto* tally : {&transforms, &projectors}) {
    for (const auto& f : tally->failures) {
      check.expect(false, f);
    }
    check.expect(tally->passed(), "suite passed");
  }
  std::ostringstream note;
  auto out = check.outcome();
  note << out.detail << " (" << transforms.checks << " transform checks, " << projectors.checks
       << " projector checks)";
  out.detail = note.str();
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::string tolerance;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction for six bundled AME states", "exact after snap", 30.0, tables},
      {2, "shadow coefficient S_{} of [2,2,2,3] is -1/6", "exact", 0.0, shadow_example},
      {3, "Scott pair {2^5} < {2^6} fails with 29/3 < 10", "exact", 0.0, scott_example},
      {4, "Hamming bound floor(4d/7) for [2,2,d], d=5..12", "exact", 0.0, hamming_example},
      {5, "Singleton max K 5 and pure Singleton max K 1 for [2,2,5]", "exact", 0.0, singleton_example},
      {6, "LP verdicts for ((2,2,5),2,5) pure and impure", "exact", 60.0, lp_verdicts},
      {7, "heatmap rows of 8 (qubit/qutrit) and 12 (qutrit/ququart) parties forbidden", "exact", 0.0, heatmaps},
      {8, "homogeneous Scott bounds 2(D^2-1) and 2D(D+1)-1 for D=2,3", "exact", 0.0, homogeneous_scott},
      {9, "grid construction to verified AME states with closed-form profiles", "exact; ame_verify 1e-9", 0.0,
       grid_pipeline},
      {10, "property suites on random states and projectors", "exact after snap; projectors 1e-9", 300.0,
       property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.passed = false;
      outcome.detail += "; exceeded the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    failed += outcome.passed ? 0 : 1;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.title
              << " | tolerance: " << c.tolerance << " | " << std::fixed << std::setprecision(3) << seconds << " s | "
              << outcome.detail << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
