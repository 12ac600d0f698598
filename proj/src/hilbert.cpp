#include "qweight/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qweight {
namespace {

constexpr double norm_tolerance = 1e-12;
constexpr double hermitian_tolerance = 1e-10;

Complex root_of_unity(int d, long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % d) / d;
  return {std::cos(angle), std::sin(angle)};
}

std::vector<std::size_t> site_strides(const DimensionSpec& spec) {
  std::vector<std::size_t> strides(static_cast<std::size_t>(spec.size()));
  std::size_t stride = 1;
  for (int s = spec.size() - 1; s >= 0; --s) {
    strides[static_cast<std::size_t>(s)] = stride;
    stride *= static_cast<std::size_t>(spec.dim(s));
  }
  return strides;
}

// Splits a full basis index into (kept index, traced index) tables.
struct SplitIndex {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

SplitIndex split_index(const DimensionSpec& spec, IndexSubset keep) {
  SplitIndex split;
  const std::size_t dim = spec.hilbert_dimension();
  split.kept.resize(dim);
  split.traced.resize(dim);
  for (int s = 0; s < spec.size(); ++s) {
    (keep.contains(s) ? split.kept_dim : split.traced_dim) *= static_cast<std::size_t>(spec.dim(s));
  }
  for (std::size_t x = 0; x < dim; ++x) {
    const auto digits = basis_digits(spec, x);
    std::size_t k = 0;
    std::size_t t = 0;
    for (int s = 0; s < spec.size(); ++s) {
      const auto d = static_cast<std::size_t>(spec.dim(s));
      const auto digit = static_cast<std::size_t>(digits[static_cast<std::size_t>(s)]);
      if (keep.contains(s)) {
        k = k * d + digit;
      } else {
        t = t * d + digit;
      }
    }
    split.kept[x] = k;
    split.traced[x] = t;
  }
  return split;
}

}  // namespace

std::size_t basis_index(const DimensionSpec& spec, std::span<const int> digits) {
  if (digits.size() != static_cast<std::size_t>(spec.size())) {
    throw std::invalid_argument("digit string length does not match the number of sites");
  }
  std::size_t index = 0;
  for (int s = 0; s < spec.size(); ++s) {
    const int digit = digits[static_cast<std::size_t>(s)];
    if (digit < 0 || digit >= spec.dim(s)) {
      throw std::out_of_range("digit " + std::to_string(digit) + " out of range at site " +
                              std::to_string(s + 1));
    }
    index = index * static_cast<std::size_t>(spec.dim(s)) + static_cast<std::size_t>(digit);
  }
  return index;
}

std::vector<int> basis_digits(const DimensionSpec& spec, std::size_t index) {
  std::vector<int> digits(static_cast<std::size_t>(spec.size()));
  for (int s = spec.size() - 1; s >= 0; --s) {
    const auto d = static_cast<std::size_t>(spec.dim(s));
    digits[static_cast<std::size_t>(s)] = static_cast<int>(index % d);
    index /= d;
  }
  return digits;
}

MixedState::MixedState(DimensionSpec spec, ComplexVector amplitudes)
    : spec_(std::move(spec)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != spec_.hilbert_dimension()) {
    throw std::invalid_argument("amplitude vector length does not match the Hilbert space");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > norm_tolerance) {
    throw std::invalid_argument("state is not normalised (norm " + std::to_string(amplitudes_.norm()) + ")");
  }
}

MixedState MixedState::normalized(DimensionSpec spec, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("cannot normalise the zero vector");
  }
  return MixedState(std::move(spec), amplitudes / norm);
}

MixedState MixedState::basis_state(DimensionSpec spec, std::span<const int> digits) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(spec.hilbert_dimension()));
  v(static_cast<Eigen::Index>(basis_index(spec, digits))) = 1.0;
  return MixedState(std::move(spec), std::move(v));
}

DensityOperator::DensityOperator(DimensionSpec spec, ComplexMatrix matrix)
    : spec_(std::move(spec)), matrix_(std::move(matrix)) {
  const auto dim = static_cast<Eigen::Index>(spec_.hilbert_dimension());
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("operator shape does not match the Hilbert space");
  }
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > hermitian_tolerance * scale) {
    throw std::invalid_argument("operator is not Hermitian");
  }
}

DensityOperator DensityOperator::from_state(const MixedState& state) {
  return DensityOperator(state.spec(), state.amplitudes() * state.amplitudes().adjoint());
}

ComplexMatrix weyl_matrix(int d, int a, int b) {
  if (d < 2) {
    throw std::invalid_argument("local dimension must be at least 2");
  }
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    m(((k + a) % d + d) % d, k) = root_of_unity(d, ((static_cast<long>(b) * k) % d + d) % d);
  }
  return m;
}

ErrorOperator::ErrorOperator(const DimensionSpec& spec, std::vector<std::pair<int, int>> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() != static_cast<std::size_t>(spec.size())) {
    throw std::invalid_argument("one Weyl label per site is required");
  }
  std::uint64_t mask = 0;
  for (int s = 0; s < spec.size(); ++s) {
    auto& [a, b] = labels_[static_cast<std::size_t>(s)];
    const int d = spec.dim(s);
    a = ((a % d) + d) % d;
    b = ((b % d) + d) % d;
    if (a != 0 || b != 0) {
      mask |= std::uint64_t{1} << s;
    }
  }
  support_ = IndexSubset(mask);
}

ComplexMatrix ErrorOperator::dense(const DimensionSpec& spec) const {
  ComplexMatrix result = ComplexMatrix::Ones(1, 1);
  for (int s = 0; s < spec.size(); ++s) {
    const auto& [a, b] = labels_[static_cast<std::size_t>(s)];
    const ComplexMatrix local = weyl_matrix(spec.dim(s), a, b);
    ComplexMatrix next(result.rows() * local.rows(), result.cols() * local.cols());
    for (Eigen::Index i = 0; i < result.rows(); ++i) {
      for (Eigen::Index j = 0; j < result.cols(); ++j) {
        next.block(i * local.rows(), j * local.cols(), local.rows(), local.cols()) = result(i, j) * local;
      }
    }
    result = std::move(next);
  }
  return result;
}

std::vector<ErrorOperator> error_basis(const DimensionSpec& spec, IndexSubset support) {
  const auto sites = support.sites();
  for (const int s : sites) {
    if (s >= spec.size()) {
      throw std::out_of_range("support site outside the system");
    }
  }
  std::vector<ErrorOperator> out;
  std::vector<int> label(sites.size(), 1);
  std::vector<std::pair<int, int>> labels(static_cast<std::size_t>(spec.size()), {0, 0});
  while (true) {
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const int d = spec.dim(sites[i]);
      labels[static_cast<std::size_t>(sites[i])] = {label[i] % d, label[i] / d};
    }
    out.emplace_back(spec, labels);
    std::size_t pos = sites.size();
    while (pos > 0) {
      --pos;
      const int d = spec.dim(sites[pos]);
      if (label[pos] + 1 < d * d) {
        ++label[pos];
        break;
      }
      label[pos] = 1;
      if (pos == 0) {
        return out;
      }
    }
    if (sites.empty()) {
      return out;
    }
  }
}

MonomialActionBuilder::MonomialActionBuilder(const DimensionSpec& spec)
    : spec_(spec), dimension_(spec.hilbert_dimension()), strides_(site_strides(spec)) {
  digits_.assign(static_cast<std::size_t>(spec.size()), std::vector<int>(dimension_));
  for (std::size_t x = 0; x < dimension_; ++x) {
    const auto digits = basis_digits(spec, x);
    for (int s = 0; s < spec.size(); ++s) {
      digits_[static_cast<std::size_t>(s)][x] = digits[static_cast<std::size_t>(s)];
    }
  }
  for (int s = 0; s < spec.size(); ++s) {
    std::vector<Complex> roots(static_cast<std::size_t>(spec.dim(s)));
    for (int k = 0; k < spec.dim(s); ++k) {
      roots[static_cast<std::size_t>(k)] = root_of_unity(spec.dim(s), k);
    }
    roots_.push_back(std::move(roots));
  }
}

void MonomialActionBuilder::build(std::span<const std::pair<int, int>> labels, MonomialAction& out) const {
  out.target.resize(dimension_);
  out.phase.resize(dimension_);
  for (std::size_t x = 0; x < dimension_; ++x) {
    out.target[x] = x;
    out.phase[x] = 1.0;
  }
  for (int s = 0; s < spec_.size(); ++s) {
    const auto [a, b] = labels[static_cast<std::size_t>(s)];
    if (a == 0 && b == 0) {
      continue;
    }
    const int d = spec_.dim(s);
    const auto stride = static_cast<long long>(strides_[static_cast<std::size_t>(s)]);
    const auto& digits = digits_[static_cast<std::size_t>(s)];
    const auto& roots = roots_[static_cast<std::size_t>(s)];
    for (std::size_t x = 0; x < dimension_; ++x) {
      const int k = digits[x];
      const int shifted = (k + a) % d;
      out.target[x] = static_cast<std::size_t>(static_cast<long long>(out.target[x]) +
                                               (shifted - k) * stride);
      if (b != 0) {
        out.phase[x] *= roots[static_cast<std::size_t>((b * k) % d)];
      }
    }
  }
}

DensityOperator partial_trace(const DensityOperator& rho, IndexSubset keep) {
  const auto& spec = rho.spec();
  if (!keep.is_subset_of(IndexSubset::all(spec.size()))) {
    throw std::out_of_range("kept sites outside the system");
  }
  if (keep.empty()) {
    throw std::invalid_argument("tracing out every site leaves a scalar, not an operator");
  }
  const SplitIndex split = split_index(spec, keep);
  const auto dim = spec.hilbert_dimension();
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(split.kept_dim),
                                          static_cast<Eigen::Index>(split.kept_dim));
  const auto& m = rho.matrix();
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (split.traced[x] == split.traced[y]) {
        out(static_cast<Eigen::Index>(split.kept[x]), static_cast<Eigen::Index>(split.kept[y])) +=
            m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
      }
    }
  }
  return DensityOperator(spec.restricted_to(keep), std::move(out));
}

DensityOperator partial_trace(const MixedState& state, IndexSubset keep) {
  const auto& spec = state.spec();
  if (!keep.is_subset_of(IndexSubset::all(spec.size()))) {
    throw std::out_of_range("kept sites outside the system");
  }
  if (keep.empty()) {
    throw std::invalid_argument("tracing out every site leaves a scalar, not an operator");
  }
  const SplitIndex split = split_index(spec, keep);
  // Reshape into a kept x traced matrix; the reduced state is psi psi^dag.
  ComplexMatrix psi = ComplexMatrix::Zero(static_cast<Eigen::Index>(split.kept_dim),
                                          static_cast<Eigen::Index>(split.traced_dim));
  const auto& amps = state.amplitudes();
  for (std::size_t x = 0; x < spec.hilbert_dimension(); ++x) {
    psi(static_cast<Eigen::Index>(split.kept[x]), static_cast<Eigen::Index>(split.traced[x])) =
        amps(static_cast<Eigen::Index>(x));
  }
  ComplexMatrix reduced = psi * psi.adjoint();
  return DensityOperator(spec.restricted_to(keep), std::move(reduced));
}

double purity(const DensityOperator& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

ComplexMatrix extend_with_identity(const DensityOperator& reduced, const DimensionSpec& full,
                                   IndexSubset keep) {
  if (reduced.spec() != full.restricted_to(keep)) {
    throw std::invalid_argument("reduced operator does not live on the kept sites");
  }
  const SplitIndex split = split_index(full, keep);
  const auto dim = full.hilbert_dimension();
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (split.traced[x] == split.traced[y]) {
        out(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
            reduced.matrix()(static_cast<Eigen::Index>(split.kept[x]), static_cast<Eigen::Index>(split.kept[y]));
      }
    }
  }
  return out;
}

ComplexMatrix bloch_reconstruct(const DimensionSpec& spec, const ComplexMatrix& m, IndexSubset subset) {
  const auto dim = static_cast<Eigen::Index>(spec.hilbert_dimension());
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const auto outer = subset.mask();
  // Enumerate every support contained in the subset, identity included.
  for (std::uint64_t inner = outer;; inner = (inner - 1) & outer) {
    for (const auto& e : error_basis(spec, IndexSubset(inner))) {
      const ComplexMatrix dense = e.dense(spec);
      out += (dense.adjoint() * m).trace() * dense;
    }
    if (inner == 0) {
      break;
    }
  }
  return out / spec.dim_of(subset).get_d();
}

}  // namespace qweight
