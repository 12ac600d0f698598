#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qweight/rational.hpp"

namespace qweight {

enum class Relation { Equal, GreaterEqual, LessEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::Equal;
  Rational rhs;
  std::string label;
};

/// Linear system over non-negative variables.
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct SimplexResult {
  LpStatus status = LpStatus::Infeasible;
  /// A feasible (optimal, when an objective was given) point.
  std::vector<Rational> point;
  /// Farkas multipliers, one per constraint, when infeasible: non-negative on
  /// >= rows, non-positive on <= rows, with sum y_i a_i <= 0 componentwise
  /// and sum y_i b_i > 0.
  std::vector<Rational> multipliers;
  std::optional<Rational> objective;
};

/// Exact two-phase simplex with Bland's rule. With an objective, maximises
/// objective . x over the feasible set.
SimplexResult solve_lp(const LinearProgram& program, const std::vector<Rational>* objective = nullptr);

bool satisfies(const LinearProgram& program, std::span<const Rational> point);

/// Positive gap sum y_i b_i of a valid infeasibility certificate, or nullopt.
std::optional<Rational> farkas_gap(const LinearProgram& program, std::span<const Rational> multipliers);

}  // namespace qweight
