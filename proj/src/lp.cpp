#include "qweight/lp.hpp"

#include <sstream>

#include "qweight/transforms.hpp"

namespace qweight {
namespace {

std::string name_of(const char* family, const DimensionMultiset& v) { return std::string(family) + v.to_string(); }

LpVerdict finish(const CodeLp& lp, const SimplexResult& result) {
  LpVerdict verdict;
  switch (result.status) {
    case LpStatus::Feasible:
      if (!satisfies(lp.program, result.point)) {
        throw std::logic_error("simplex returned a point that violates the constraints");
      }
      verdict.feasible = true;
      verdict.point = result.point;
      verdict.objective = result.objective;
      break;
    case LpStatus::Unbounded:
      verdict.feasible = true;
      verdict.unbounded = true;
      break;
    case LpStatus::Infeasible:
      verdict.multipliers = result.multipliers;
      verdict.gap = farkas_gap(lp.program, verdict.multipliers);
      if (!verdict.gap) {
        throw std::logic_error("simplex returned an invalid infeasibility certificate");
      }
      break;
  }
  return verdict;
}

}  // namespace

CodeLp build_lp(const CodeParams& params) {
  params.validate();
  SubMultisetLattice lattice(params.spec.multiset());
  if (lattice.size() > max_lp_variables) {
    throw ProblemTooLarge("code LP would need " + std::to_string(lattice.size()) + " variables (limit " +
                          std::to_string(max_lp_variables) + ")");
  }
  const std::size_t n = lattice.size();
  const Rational k(params.code_dimension);
  const KroneckerKernel b_kernel = b_from_a_kernel(lattice.total());
  const KroneckerKernel s_kernel = s_from_a_kernel(lattice.total());

  LinearProgram program;
  program.variables = n;
  const auto unit = [n](std::size_t i, const Rational& coefficient) {
    std::vector<Rational> row(n);
    row[i] = coefficient;
    return row;
  };

  program.constraints.push_back({unit(0, 1), Relation::Equal, k * k, "A{} = K^2"});
  for (std::size_t v = 0; v < n; ++v) {
    const DimensionMultiset mv = lattice.at(v);
    std::vector<Rational> kb_minus_a(n);
    for (std::size_t w = 0; w < n; ++w) {
      kb_minus_a[w] = k * b_kernel.entry(v, w);
    }
    kb_minus_a[v] -= 1;
    const bool below_distance = lattice.dim_at(v) < params.distance;
    if (below_distance || v == 0) {
      program.constraints.push_back(
          {std::move(kb_minus_a), Relation::Equal, 0, "K*" + name_of("B", mv) + " - " + name_of("A", mv) + " = 0"});
      if (params.pure && v != 0) {
        program.constraints.push_back({unit(v, 1), Relation::Equal, 0, name_of("A", mv) + " = 0"});
      }
    } else {
      program.constraints.push_back(
          {std::move(kb_minus_a), Relation::GreaterEqual, 0, "K*" + name_of("B", mv) + " - " + name_of("A", mv) + " >= 0"});
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> row(n);
    for (std::size_t w = 0; w < n; ++w) {
      row[w] = s_kernel.entry(v, w);
    }
    program.constraints.push_back({std::move(row), Relation::GreaterEqual, 0, name_of("S", lattice.at(v)) + " >= 0"});
  }
  return {params, std::move(lattice), std::move(program)};
}

LpVerdict solve_feasibility(const CodeLp& lp) { return finish(lp, solve_lp(lp.program)); }

LpVerdict maximize(const CodeLp& lp, const DimensionMultiset& target) {
  std::vector<Rational> objective(lp.program.variables);
  objective[lp.lattice.index_of(target)] = 1;
  return finish(lp, solve_lp(lp.program, &objective));
}

LpVerdict code_feasible(const CodeParams& params) { return solve_feasibility(build_lp(params)); }

std::string emit_lp(const CodeLp& lp) {
  std::ostringstream out;
  out << "# qweight code LP\n";
  out << "dims " << lp.params.spec.to_string() << '\n';
  out << "K " << to_string(lp.params.code_dimension) << '\n';
  out << "D " << to_string(lp.params.distance) << '\n';
  out << "pure " << (lp.params.pure ? 1 : 0) << '\n';
  out << "variables " << lp.program.variables << '\n';
  for (std::size_t j = 0; j < lp.program.variables; ++j) {
    out << "x" << j << " A" << lp.lattice.at(j).to_string() << " >= 0\n";
  }
  out << "constraints " << lp.program.constraints.size() << '\n';
  for (const auto& c : lp.program.constraints) {
    out << (c.relation == Relation::Equal ? "eq" : c.relation == Relation::GreaterEqual ? "ge" : "le");
    for (const auto& a : c.coefficients) {
      out << ' ' << to_string(a);
    }
    out << " | " << to_string(c.rhs) << " # " << c.label << '\n';
  }
  return out.str();
}

}  // namespace qweight
