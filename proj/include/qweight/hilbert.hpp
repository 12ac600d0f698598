#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "qweight/multiset.hpp"

namespace qweight {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Basis index <-> per-site digits. Site 0 is the most significant digit.
std::size_t basis_index(const DimensionSpec& spec, std::span<const int> digits);
std::vector<int> basis_digits(const DimensionSpec& spec, std::size_t index);

/// Normalised pure state on a multipartite system.
class MixedState {
 public:
  MixedState(DimensionSpec spec, ComplexVector amplitudes);
  /// Rescales amplitudes to unit norm; throws on the zero vector.
  static MixedState normalized(DimensionSpec spec, ComplexVector amplitudes);
  static MixedState basis_state(DimensionSpec spec, std::span<const int> digits);

  const DimensionSpec& spec() const noexcept { return spec_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  DimensionSpec spec_;
  ComplexVector amplitudes_;
};

/// Hermitian operator on a multipartite system (a reduced state when its
/// trace is one).
class DensityOperator {
 public:
  DensityOperator(DimensionSpec spec, ComplexMatrix matrix);
  static DensityOperator from_state(const MixedState& state);

  const DimensionSpec& spec() const noexcept { return spec_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex trace() const { return matrix_.trace(); }

 private:
  DimensionSpec spec_;
  ComplexMatrix matrix_;
};

/// X^a Z^b with X|k> = |k+1 mod d> and Z|k> = w^k |k>, w = exp(2 pi i / d).
ComplexMatrix weyl_matrix(int d, int a, int b);

/// Tensor product of Weyl operators, one (a, b) label per site.
class ErrorOperator {
 public:
  ErrorOperator(const DimensionSpec& spec, std::vector<std::pair<int, int>> labels);

  /// Sites carrying a non-identity factor.
  IndexSubset support() const noexcept { return support_; }
  std::span<const std::pair<int, int>> labels() const noexcept { return labels_; }

  ComplexMatrix dense(const DimensionSpec& spec) const;

 private:
  std::vector<std::pair<int, int>> labels_;
  IndexSubset support_;
};

/// All error operators whose support is exactly the given subset; the
/// first support site is the slowest-varying, local labels run X, Z, XZ, ...
std::vector<ErrorOperator> error_basis(const DimensionSpec& spec, IndexSubset support);

/// E|x> = phase[x] |target[x]> for a Weyl error E.
struct MonomialAction {
  std::vector<std::size_t> target;
  std::vector<Complex> phase;
};

/// Builds the monomial action of errors with a fixed support, reusing the
/// digit table across calls.
class MonomialActionBuilder {
 public:
  explicit MonomialActionBuilder(const DimensionSpec& spec);
  void build(std::span<const std::pair<int, int>> labels, MonomialAction& out) const;
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  DimensionSpec spec_;
  std::size_t dimension_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<int>> digits_;
  std::vector<std::vector<Complex>> roots_;
};

DensityOperator partial_trace(const DensityOperator& rho, IndexSubset keep);
DensityOperator partial_trace(const MixedState& state, IndexSubset keep);

/// Tr(rho^2).
double purity(const DensityOperator& rho);

/// reduced (on the sites in keep) tensored with the identity on the rest,
/// as a matrix on the full system.
ComplexMatrix extend_with_identity(const DensityOperator& reduced, const DimensionSpec& full,
                                   IndexSubset keep);

/// (dim S)^-1 sum over errors E with support inside S of Tr(E^dag M) E.
ComplexMatrix bloch_reconstruct(const DimensionSpec& spec, const ComplexMatrix& m, IndexSubset subset);

}  // namespace qweight
