#include <doctest.h>

#include <numbers>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/hilbert.hpp"

using namespace qweight;
using oracle::DenseMatrix;

namespace {

double distance(const DenseMatrix& left, const DenseMatrix& right) { return (left - right).norm(); }

DenseMatrix random_hermitian(std::size_t dim, oracle::Rng& rng) {
  std::normal_distribution<double> gauss;
  const auto n = static_cast<Eigen::Index>(dim);
  DenseMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return (g + g.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("Weyl matrices match the entry-wise definition") {
  for (int d = 2; d <= 5; ++d) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        CHECK(distance(weyl_matrix(d, a, b), oracle::weyl(d, a, b)) < 1e-12);
      }
    }
  }
  DenseMatrix pauli_x(2, 2);
  pauli_x << 0, 1, 1, 0;
  DenseMatrix pauli_z(2, 2);
  pauli_z << 1, 0, 0, -1;
  CHECK(distance(weyl_matrix(2, 1, 0), pauli_x) < 1e-15);
  CHECK(distance(weyl_matrix(2, 0, 1), pauli_z) < 1e-15);

  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const DenseMatrix xz = weyl_matrix(3, 1, 1);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(xz((k + 1) % 3, k) - std::pow(omega, k)) < 1e-12);
  }
  CHECK(std::abs(xz.cwiseAbs().sum() - 3.0) < 1e-12);
}

TEST_CASE("error bases have the expected size and support") {
  CHECK(error_basis(DimensionSpec{2}, IndexSubset::from_sites({0})).size() == 3);
  CHECK(error_basis(DimensionSpec{2, 2, 5}, IndexSubset::from_sites({0})).size() == 3);
  CHECK(error_basis(DimensionSpec{2, 3}, IndexSubset::from_sites({0, 1})).size() == 24);
  CHECK(error_basis(DimensionSpec{2, 3}, IndexSubset{}).size() == 1);

  const DimensionSpec spec{2, 3, 2};
  const auto support = IndexSubset::from_sites({0, 2});
  for (const auto& e : error_basis(spec, support)) {
    CHECK(e.support() == support);
    std::vector<std::pair<int, int>> labels(e.labels().begin(), e.labels().end());
    CHECK(distance(e.dense(spec), oracle::error_matrix(spec, labels)) < 1e-12);
  }
}

TEST_CASE("monomial actions agree with dense errors") {
  const DimensionSpec spec{3, 2, 4};
  const MonomialActionBuilder builder(spec);
  MonomialAction action;
  oracle::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<int, int>> labels;
    for (const int d : spec.dims()) {
      std::uniform_int_distribution<int> pick(0, d - 1);
      labels.emplace_back(pick(rng), pick(rng));
    }
    builder.build(labels, action);
    const DenseMatrix dense = oracle::error_matrix(spec, labels);
    DenseMatrix rebuilt = DenseMatrix::Zero(dense.rows(), dense.cols());
    for (std::size_t x = 0; x < builder.dimension(); ++x) {
      rebuilt(static_cast<Eigen::Index>(action.target[x]), static_cast<Eigen::Index>(x)) = action.phase[x];
    }
    CHECK(distance(rebuilt, dense) < 1e-12);
  }
}

TEST_CASE("basis digits round trip") {
  const DimensionSpec spec{2, 3, 4};
  for (std::size_t i = 0; i < spec.hilbert_dimension(); ++i) {
    CHECK(basis_index(spec, basis_digits(spec, i)) == i);
  }
  CHECK(basis_index(spec, std::vector{1, 0, 0}) == 12);
  CHECK_THROWS(basis_index(spec, std::vector{0, 3, 0}));
}

TEST_CASE("operands validate their input") {
  const DimensionSpec spec{2, 2};
  CHECK_THROWS_AS(MixedState(spec, Eigen::VectorXcd::Ones(4)), std::invalid_argument);
  CHECK_THROWS_AS(MixedState(spec, Eigen::VectorXcd::Ones(3)), std::invalid_argument);
  CHECK_THROWS_AS(MixedState::normalized(spec, Eigen::VectorXcd::Zero(4)), std::invalid_argument);
  DenseMatrix skew = DenseMatrix::Zero(4, 4);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(DensityOperator(spec, skew), std::invalid_argument);
  CHECK(std::abs(MixedState::normalized(spec, Eigen::VectorXcd::Ones(4)).amplitudes().norm() - 1.0) < 1e-15);
}

TEST_CASE("partial trace matches index matching") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const DimensionSpec spec = oracle::random_spec(rng, 4, 64);
    const MixedState state = oracle::random_gaussian_state(spec, rng, 6);
    const DenseMatrix herm = random_hermitian(spec.hilbert_dimension(), rng);
    const std::uint64_t full = (std::uint64_t{1} << spec.size()) - 1;
    for (std::uint64_t keep = 1; keep <= full; ++keep) {
      const DenseMatrix expected_state = oracle::reduce(oracle::projector_of(state), spec, keep);
      CHECK(distance(partial_trace(state, IndexSubset(keep)).matrix(), expected_state) < 1e-12);
      const DenseMatrix expected_op = oracle::reduce(herm, spec, keep);
      CHECK(distance(partial_trace(DensityOperator(spec, herm), IndexSubset(keep)).matrix(), expected_op) < 1e-10);
    }
  }
  CHECK_THROWS(partial_trace(MixedState::basis_state(DimensionSpec{2}, std::vector{0}), IndexSubset{}));
}

TEST_CASE("reductions of the bundled states") {
  const auto product = MixedState::basis_state(DimensionSpec{2, 2}, std::vector{0, 0});
  DenseMatrix zero = DenseMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  CHECK(distance(partial_trace(product, IndexSubset::from_sites({0})).matrix(), zero) < 1e-15);

  const auto ame234 = fixtures::bundled_state("ame234");
  CHECK(distance(partial_trace(ame234, IndexSubset::from_sites({2})).matrix(), DenseMatrix::Identity(4, 4) / 4.0) <
        1e-12);
  CHECK(purity(partial_trace(fixtures::bundled_state("ame223"), IndexSubset::from_sites({0, 1}))) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(purity(partial_trace(fixtures::bundled_state("ame233"), IndexSubset::from_sites({0}))) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(purity(partial_trace(fixtures::bundled_state("ame334"), IndexSubset::from_sites({0, 1}))) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(purity(DensityOperator(DimensionSpec{2, 3}, DenseMatrix::Identity(6, 6) / 6.0)) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("Bloch reconstruction equals the reduced operator padded with identity") {
  oracle::Rng rng(5);
  const DimensionSpec spec{2, 3};
  const DenseMatrix m = random_hermitian(6, rng);
  const auto first = IndexSubset::from_sites({0});
  const DenseMatrix expected = oracle::kron(oracle::reduce(m, spec, first.mask()), DenseMatrix::Identity(3, 3));
  CHECK(distance(bloch_reconstruct(spec, m, first), expected) < 1e-9);
  CHECK(distance(extend_with_identity(partial_trace(DensityOperator(spec, m), first), spec, first), expected) < 1e-9);
  CHECK(distance(bloch_reconstruct(spec, m, IndexSubset::all(2)), m) < 1e-9);
  // Identity on the whole system is kept; on a part, the traced-out factor contributes its dimension.
  CHECK(distance(bloch_reconstruct(spec, DenseMatrix::Identity(6, 6), IndexSubset::all(2)),
                 DenseMatrix::Identity(6, 6)) < 1e-12);
  CHECK(distance(bloch_reconstruct(spec, DenseMatrix::Identity(6, 6), IndexSubset::from_sites({1})),
                 2.0 * DenseMatrix::Identity(6, 6)) < 1e-12);

  const auto ame223 = oracle::projector_of(fixtures::bundled_state("ame223"));
  const DimensionSpec spec223{2, 2, 3};
  const auto third = IndexSubset::from_sites({2});
  const DenseMatrix mixed = oracle::kron(DenseMatrix::Identity(4, 4), DenseMatrix::Identity(3, 3) / 3.0);
  CHECK(distance(bloch_reconstruct(spec223, ame223, third), mixed) < 1e-12);
}

TEST_CASE("twirling over the errors on S depolarises S") {
  // sum_{supp E in S} E M E^dag = dim S * (Tr_S M) (x) identity on S.
  oracle::Rng rng(9);
  const DimensionSpec spec{2, 3, 2};
  const DenseMatrix m = random_hermitian(12, rng);
  for (std::uint64_t s = 1; s < 7; ++s) {
    DenseMatrix twirl = DenseMatrix::Zero(12, 12);
    for (std::uint64_t inner = 0; inner <= s; ++inner) {
      if ((inner & s) != inner) {
        continue;
      }
      for (const auto& e : error_basis(spec, IndexSubset(inner))) {
        const DenseMatrix dense = e.dense(spec);
        twirl += dense * m * dense.adjoint();
      }
    }
    const IndexSubset keep = IndexSubset(s).complement(3);
    const double dim_s = spec.dim_of(IndexSubset(s)).get_d();
    const DenseMatrix expected =
        dim_s * extend_with_identity(partial_trace(DensityOperator(spec, m), keep), spec, keep);
    CHECK(distance(twirl, expected) < 1e-9);
  }
}

TEST_CASE("enumerators are invariant under local unitaries") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    const DimensionSpec spec = oracle::random_spec(rng, 3, 48);
    const MixedState state = oracle::random_gaussian_state(spec, rng, 6);
    DenseMatrix local = DenseMatrix::Identity(1, 1);
    for (const int d : spec.dims()) {
      local = oracle::kron(local, oracle::random_unitary(d, rng));
    }
    const MixedState rotated(spec, local * state.amplitudes());
    const auto before = shor_laflamme_real(state, state);
    const auto after = shor_laflamme_real(rotated, rotated);
    for (std::size_t v = 0; v < before.a.size(); ++v) {
      CHECK(after.a[v] == doctest::Approx(before.a[v]).epsilon(1e-9));
      CHECK(after.b[v] == doctest::Approx(before.b[v]).epsilon(1e-9));
    }
  }
}
