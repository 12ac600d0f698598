#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "qweight/hilbert.hpp"
#include "qweight/profile.hpp"

namespace qweight {

/// Either a pure state (treated as its rank-one projector) or a Hermitian
/// operator.
using Operand = std::variant<MixedState, DensityOperator>;

const DimensionSpec& operand_spec(const Operand& op);

/// Floating-point Shor-Laflamme sums, indexed in lattice order.
struct RealEnumerators {
  SubMultisetLattice lattice;
  std::vector<double> a;
  std::vector<double> b;
};

/// Per-subset values Tr(Tr_{S^c} M Tr_{S^c} N) and the primed-B partner,
/// indexed by subset mask.
struct RealCalligraphic {
  DimensionSpec spec;
  std::vector<double> a_prime;
  std::vector<double> b_prime;
};

struct CalligraphicTable {
  DimensionSpec spec;
  std::vector<Rational> a_prime;  // indexed by IndexSubset::mask()
  std::vector<Rational> b_prime;

  const Rational& a_at(IndexSubset s) const { return a_prime.at(s.mask()); }
  const Rational& b_at(IndexSubset s) const { return b_prime.at(s.mask()); }
};

/// Sums over all Weyl errors, grouped by the dimension multiset of their
/// support: A_v = sum Tr(EM) Tr(E^dag N), B_v = sum Tr(E M E^dag N).
RealEnumerators shor_laflamme_real(const Operand& m, const Operand& n);
std::pair<EnumeratorProfile, EnumeratorProfile> shor_laflamme_profiles(const Operand& m, const Operand& n);

RealCalligraphic calligraphic_real(const Operand& m, const Operand& n);
CalligraphicTable calligraphic_profile(const Operand& m, const Operand& n);

/// A'_w and B'_w: calligraphic values summed over subsets realising w.
std::pair<EnumeratorProfile, EnumeratorProfile> unitary_profiles(const Operand& m, const Operand& n);

/// Shadow coefficients evaluated directly from the calligraphic values.
EnumeratorProfile shadow_profile_brute(const Operand& m, const Operand& n);

struct CodeReport {
  bool is_code = false;
  bool is_pure = false;
  long rank = 0;
  std::vector<DimensionMultiset> code_witnesses;    // K B_v != A_v with dim v < D
  std::vector<DimensionMultiset> purity_witnesses;  // A_v != 0 with 0 < |v|, dim v < D
};

/// Tests the enumerator characterisation of a code for an orthogonal
/// projector with dimensional distance distance.
CodeReport check_code(const DensityOperator& projector, const Integer& distance);

}  // namespace qweight
