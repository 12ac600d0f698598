#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qweight/profile.hpp"

namespace qweight {

/// Binary Krawtchouk polynomial K_j(k; n) = sum_a (-1)^a C(n-k, j-a) C(k, a).
Integer krawtchouk(int j, int k, int n);

/// Weighted form sum_a (-1)^a C(n-k, j-a) C(k, a) gamma^((n-k)-(j-a)) delta^(j-a).
Integer krawtchouk_general(int j, int k, int n, const Integer& gamma, const Integer& delta);

/// Square matrix over a sub-multiset lattice whose entries factor as
/// scale * prod_d factor_d[row digit][column digit].
class KroneckerKernel {
 public:
  using Factor = std::vector<std::vector<Rational>>;

  KroneckerKernel(SubMultisetLattice lattice, std::vector<Factor> factors, Rational scale);

  const SubMultisetLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  Rational entry(std::size_t row, std::size_t column) const;
  std::vector<Rational> apply(std::span<const Rational> values) const;
  std::vector<std::vector<Rational>> dense() const;

 private:
  SubMultisetLattice lattice_;
  std::vector<Factor> factors_;
  Rational scale_;
};

/// B from A (MacWilliams identity).
KroneckerKernel b_from_a_kernel(const DimensionMultiset& total);
/// S from A (shadow identity).
KroneckerKernel s_from_a_kernel(const DimensionMultiset& total);
/// A' from A.
KroneckerKernel a_unitary_from_a_kernel(const DimensionMultiset& total);
/// A from A' (inverse of the above).
KroneckerKernel a_from_a_unitary_kernel(const DimensionMultiset& total);
/// S from A'.
KroneckerKernel s_from_a_unitary_kernel(const DimensionMultiset& total);

EnumeratorProfile b_from_a(const EnumeratorProfile& a);
EnumeratorProfile s_from_a(const EnumeratorProfile& a);
EnumeratorProfile a_unitary_from_a(const EnumeratorProfile& a);
EnumeratorProfile a_from_a_unitary(const EnumeratorProfile& a_unitary);
EnumeratorProfile shadow_from_a_unitary(const EnumeratorProfile& a_unitary);

/// Dispatches to the transform from the profile's family to target; throws
/// std::invalid_argument for unsupported pairs.
EnumeratorProfile transform_to(const EnumeratorProfile& profile, Family target);

/// Kernel by kind: "B", "S" (from A), "A'" (from A), "A", "S'" (from A').
KroneckerKernel kernel_by_kind(const DimensionMultiset& total, std::string_view kind);

/// Per-dimension evaluation point (x_d, y_d).
using EvaluationPoint = std::map<int, std::pair<Rational, Rational>>;

/// sum_v c_v prod_d x_d^(m_d(N) - m_d(v)) y_d^(m_d(v)).
Rational evaluate_enumerator(const EnumeratorProfile& profile, const EvaluationPoint& point);

/// Checks A(x, y) == B((x + (d^2 - 1) y) / d, (x - y) / d) for every d.
bool macwilliams_eval_check(const EnumeratorProfile& a, const EnumeratorProfile& b, const EvaluationPoint& point);

/// Dense kernel as CSV of "p/q" strings, rows and columns in lattice order.
std::string kernel_csv(const KroneckerKernel& kernel);

}  // namespace qweight
