#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qweight/multiset.hpp"
#include "qweight/rational.hpp"

namespace qweight {

/// Coefficient families indexed by dimension multisets.
enum class Family { A, B, APrime, BPrime, S };

std::string_view family_name(Family family);
/// Accepts "A", "B", "A'", "B'", "S" and the ASCII aliases "Ap", "Bp".
Family parse_family(std::string_view name);

/// One coefficient per sub-multiset of the system's dimension multiset,
/// stored in lattice order.
class EnumeratorProfile {
 public:
  EnumeratorProfile(Family family, DimensionSpec spec, std::vector<Rational> values);
  static EnumeratorProfile zeros(Family family, DimensionSpec spec);

  Family family() const noexcept { return family_; }
  const DimensionSpec& spec() const noexcept { return spec_; }
  const SubMultisetLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const Rational> values() const noexcept { return values_; }
  const Rational& operator[](std::size_t index) const { return values_.at(index); }
  Rational& operator[](std::size_t index) { return values_.at(index); }
  const Rational& at(const DimensionMultiset& v) const { return values_.at(lattice_.index_of(v)); }

  friend bool operator==(const EnumeratorProfile& a, const EnumeratorProfile& b) {
    return a.family_ == b.family_ && a.spec_ == b.spec_ && a.values_ == b.values_;
  }

 private:
  Family family_;
  DimensionSpec spec_;
  SubMultisetLattice lattice_;
  std::vector<Rational> values_;
};

}  // namespace qweight
