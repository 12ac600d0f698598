#include "qweight/simplex.hpp"

#include <stdexcept>

namespace qweight {
namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& program) : vars_(program.variables) {
    const std::size_t m = program.constraints.size();
    std::size_t slacks = 0;
    for (const auto& c : program.constraints) {
      if (c.coefficients.size() != vars_) {
        throw std::invalid_argument("constraint '" + c.label + "' has the wrong number of coefficients");
      }
      slacks += c.relation == Relation::Equal ? 0 : 1;
    }
    first_artificial_ = vars_ + slacks;
    columns_ = first_artificial_ + m;
    rows_.assign(m, std::vector<Rational>(columns_ + 1));
    sign_.assign(m, 1);
    basis_.resize(m);
    std::size_t slack = vars_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = program.constraints[i];
      auto& row = rows_[i];
      for (std::size_t j = 0; j < vars_; ++j) {
        row[j] = c.coefficients[j];
      }
      if (c.relation == Relation::GreaterEqual) {
        row[slack++] = -1;
      } else if (c.relation == Relation::LessEqual) {
        row[slack++] = 1;
      }
      row[columns_] = c.rhs;
      if (c.rhs < 0) {
        sign_[i] = -1;
        for (auto& entry : row) {
          entry = -entry;
        }
      }
      row[first_artificial_ + i] = 1;
      basis_[i] = first_artificial_ + i;
    }
    allowed_.assign(columns_, true);
  }

  // Phase one: minimise the sum of artificial variables. Returns the optimum.
  Rational phase_one() {
    std::vector<Rational> cost(columns_);
    for (std::size_t j = first_artificial_; j < columns_; ++j) {
      cost[j] = 1;
    }
    set_costs(cost);
    optimise();
    return -reduced_[columns_];
  }

  // Duals y = c_B B^-1 of phase one, read off the artificial columns.
  std::vector<Rational> phase_one_duals() const {
    std::vector<Rational> y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      y[i] = Rational(1) - reduced_[first_artificial_ + i];
      y[i] *= sign_[i];
    }
    return y;
  }

  void drop_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t pivot_col = columns_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (rows_[i][j] != 0) {
          pivot_col = j;
          break;
        }
      }
      if (pivot_col == columns_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, pivot_col);
      ++i;
    }
    for (std::size_t j = first_artificial_; j < columns_; ++j) {
      allowed_[j] = false;
    }
  }

  // Returns false when the objective is unbounded.
  bool phase_two(const std::vector<Rational>& objective) {
    std::vector<Rational> cost(columns_);
    for (std::size_t j = 0; j < vars_; ++j) {
      cost[j] = -objective[j];
    }
    set_costs(cost);
    return optimise();
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(vars_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < vars_) {
        x[basis_[i]] = rows_[i][columns_];
      }
    }
    return x;
  }

 private:
  void set_costs(const std::vector<Rational>& cost) {
    reduced_.assign(columns_ + 1, Rational(0));
    for (std::size_t j = 0; j < columns_; ++j) {
      reduced_[j] = cost[j];
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) {
        continue;
      }
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (rows_[i][j] != 0) {
          reduced_[j] -= cb * rows_[i][j];
        }
      }
    }
  }

  bool optimise() {
    while (true) {
      std::size_t entering = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (allowed_[j] && reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == columns_) {
        return true;
      }
      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) {
          continue;
        }
        const Rational ratio = rows_[i][columns_] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_.size()) {
        return false;
      }
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = Rational(1) / prow[c];
    for (auto& entry : prow) {
      if (entry != 0) {
        entry *= inv;
      }
    }
    const auto eliminate = [&](std::vector<Rational>& row) {
      const Rational factor = row[c];
      if (factor == 0) {
        return;
      }
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (prow[j] != 0) {
          row[j] -= factor * prow[j];
        }
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) {
        eliminate(rows_[i]);
      }
    }
    if (!reduced_.empty()) {
      eliminate(reduced_);
    }
    basis_[r] = c;
  }

  std::size_t vars_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  std::vector<bool> allowed_;
};

}  // namespace

SimplexResult solve_lp(const LinearProgram& program, const std::vector<Rational>* objective) {
  if (objective && objective->size() != program.variables) {
    throw std::invalid_argument("objective has the wrong number of coefficients");
  }
  Tableau tableau(program);
  SimplexResult result;
  if (tableau.phase_one() > 0) {
    result.status = LpStatus::Infeasible;
    result.multipliers = tableau.phase_one_duals();
    return result;
  }
  result.status = LpStatus::Feasible;
  if (objective) {
    tableau.drop_artificials();
    if (!tableau.phase_two(*objective)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
  }
  result.point = tableau.point();
  if (objective) {
    Rational value = 0;
    for (std::size_t j = 0; j < program.variables; ++j) {
      value += (*objective)[j] * result.point[j];
    }
    result.objective = value;
  }
  return result;
}

bool satisfies(const LinearProgram& program, std::span<const Rational> point) {
  if (point.size() != program.variables) {
    return false;
  }
  for (const auto& x : point) {
    if (x < 0) {
      return false;
    }
  }
  for (const auto& c : program.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < program.variables; ++j) {
      lhs += c.coefficients[j] * point[j];
    }
    const bool ok = c.relation == Relation::Equal          ? lhs == c.rhs
                    : c.relation == Relation::GreaterEqual ? lhs >= c.rhs
                                                           : lhs <= c.rhs;
    if (!ok) {
      return false;
    }
  }
  return true;
}

std::optional<Rational> farkas_gap(const LinearProgram& program, std::span<const Rational> multipliers) {
  if (multipliers.size() != program.constraints.size()) {
    return std::nullopt;
  }
  std::vector<Rational> combined(program.variables);
  Rational gap = 0;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const auto& c = program.constraints[i];
    const Rational& y = multipliers[i];
    if ((c.relation == Relation::GreaterEqual && y < 0) || (c.relation == Relation::LessEqual && y > 0)) {
      return std::nullopt;
    }
    for (std::size_t j = 0; j < program.variables; ++j) {
      combined[j] += y * c.coefficients[j];
    }
    gap += y * c.rhs;
  }
  for (const auto& v : combined) {
    if (v > 0) {
      return std::nullopt;
    }
  }
  if (gap <= 0) {
    return std::nullopt;
  }
  return gap;
}

}  // namespace qweight
