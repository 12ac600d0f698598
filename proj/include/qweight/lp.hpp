#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweight/bounds.hpp"
#include "qweight/simplex.hpp"

namespace qweight {

/// Raised when a code LP would exceed the supported number of variables.
class ProblemTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t max_lp_variables = 4096;

/// Linear program in the unknowns A_v (one per sub-multiset, lattice
/// order, all non-negative) encoding the enumerator constraints of a code.
struct CodeLp {
  CodeParams params;
  SubMultisetLattice lattice;
  LinearProgram program;
};

struct LpVerdict {
  bool feasible = false;
  std::vector<Rational> point;        // A_v when feasible
  std::vector<Rational> multipliers;  // per constraint when infeasible
  std::optional<Rational> gap;        // certificate gap, re-verified exactly
  std::optional<Rational> objective;
  bool unbounded = false;
};

CodeLp build_lp(const CodeParams& params);

LpVerdict solve_feasibility(const CodeLp& lp);

/// Maximises A_target over the feasible set.
LpVerdict maximize(const CodeLp& lp, const DimensionMultiset& target);

LpVerdict code_feasible(const CodeParams& params);

/// Plain-text dump of the constraint system (format described in README).
std::string emit_lp(const CodeLp& lp);

}  // namespace qweight
