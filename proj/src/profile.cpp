#include "qweight/profile.hpp"

#include <stdexcept>

namespace qweight {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::A:
      return "A";
    case Family::B:
      return "B";
    case Family::APrime:
      return "A'";
    case Family::BPrime:
      return "B'";
    case Family::S:
      return "S";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "A'" || name == "Ap") return Family::APrime;
  if (name == "B'" || name == "Bp") return Family::BPrime;
  if (name == "S") return Family::S;
  throw std::invalid_argument("unknown coefficient family: " + std::string(name));
}

EnumeratorProfile::EnumeratorProfile(Family family, DimensionSpec spec, std::vector<Rational> values)
    : family_(family), spec_(std::move(spec)), lattice_(spec_.multiset()), values_(std::move(values)) {
  if (values_.size() != lattice_.size()) {
    throw std::invalid_argument("profile needs " + std::to_string(lattice_.size()) +
                                " values, got " + std::to_string(values_.size()));
  }
}

EnumeratorProfile EnumeratorProfile::zeros(Family family, DimensionSpec spec) {
  const SubMultisetLattice lattice(spec.multiset());
  return EnumeratorProfile(family, std::move(spec), std::vector<Rational>(lattice.size()));
}

}  // namespace qweight
