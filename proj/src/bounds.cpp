#include "qweight/bounds.hpp"

#include <stdexcept>

namespace qweight {
namespace {

std::string partition_string(const DimensionMultiset& w1, const DimensionMultiset& w2, const DimensionMultiset& w3) {
  return w1.to_string() + " + " + w2.to_string() + " + " + w3.to_string();
}

// (dim x)^2 <= dim N, i.e. dim x does not exceed the square root of dim N.
bool at_most_half(const Integer& dim_x, const Integer& dim_total) { return dim_x * dim_x <= dim_total; }

}  // namespace

void CodeParams::validate() const {
  if (code_dimension < 1) {
    throw std::invalid_argument("code dimension K must be at least 1");
  }
  if (distance < 1) {
    throw std::invalid_argument("distance D must be at least 1");
  }
  if (code_dimension > spec.total_dimension()) {
    throw std::invalid_argument("code dimension exceeds the Hilbert space dimension");
  }
}

Integer max_correctable_threshold(const Integer& distance) {
  if (distance < 1) {
    throw std::invalid_argument("distance must be at least 1");
  }
  Integer t;
  const Integer below = distance - 1;
  mpz_sqrt(t.get_mpz_t(), below.get_mpz_t());
  return t;
}

Integer hamming_volume(const DimensionMultiset& total, const Integer& threshold) {
  const SubMultisetLattice lattice(total);
  Integer volume = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice.dim_at(i) > threshold) {
      continue;
    }
    Integer term = 1;
    for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
      const int d = lattice.dimensions()[slot];
      const int m = lattice.digit(i, slot);
      term *= binomial(lattice.capacities()[slot], m) * power(Integer(d * d - 1), static_cast<unsigned long>(m));
    }
    volume += term;
  }
  return volume;
}

Integer hamming_max_k(const DimensionSpec& spec, const Integer& threshold) {
  const Integer volume = hamming_volume(spec.multiset(), threshold);
  Integer k;
  const Integer total = spec.total_dimension();
  mpz_fdiv_q(k.get_mpz_t(), total.get_mpz_t(), volume.get_mpz_t());
  return k;
}

BoundVerdict hamming_check(const CodeParams& params) {
  params.validate();
  const Integer t = max_correctable_threshold(params.distance);
  const Integer max_k = hamming_max_k(params.spec, t);
  BoundVerdict v;
  v.bound_name = "hamming";
  v.lhs = Rational(params.code_dimension);
  v.rhs = Rational(max_k);
  v.holds = params.code_dimension <= max_k;
  v.witness = "T=" + to_string(t);
  return v;
}

SingletonBound singleton_max_k(const DimensionSpec& spec, const Integer& distance) {
  const SubMultisetLattice lattice(spec.multiset());
  SingletonBound best{spec.total_dimension(), {}, {}, spec.multiset()};
  bool found = false;
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice.dim_at(i) < distance) {
      small.push_back(i);
    }
  }
  std::vector<int> rest(lattice.slots());
  for (std::size_t a = 0; a < small.size(); ++a) {
    for (std::size_t b = a; b < small.size(); ++b) {
      bool fits = true;
      for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
        rest[slot] = lattice.capacities()[slot] - lattice.digit(small[a], slot) - lattice.digit(small[b], slot);
        fits = fits && rest[slot] >= 0;
      }
      if (!fits) {
        continue;
      }
      const std::size_t third = lattice.index_of_digits(rest);
      const Integer dim3 = lattice.dim_at(third);
      if (!found || dim3 < best.max_k) {
        best = {dim3, lattice.at(small[a]), lattice.at(small[b]), lattice.at(third)};
        found = true;
      }
    }
  }
  return best;
}

BoundVerdict singleton_check(const CodeParams& params) {
  params.validate();
  const SingletonBound bound = singleton_max_k(params.spec, params.distance);
  BoundVerdict v;
  v.bound_name = "singleton";
  v.lhs = Rational(params.code_dimension);
  v.rhs = Rational(bound.max_k);
  v.holds = params.code_dimension <= bound.max_k;
  v.witness = partition_string(bound.w1, bound.w2, bound.w3);
  v.witness_multisets = {bound.w1, bound.w2, bound.w3};
  return v;
}

Integer pure_singleton_max_k(const DimensionSpec& spec, const Integer& distance) {
  const SubMultisetLattice lattice(spec.multiset());
  Integer largest = 0;
  for (std::size_t i = 0; i < lattice.top(); ++i) {
    const Integer dim = lattice.dim_at(i);
    if (dim < distance && dim > largest) {
      largest = dim;
    }
  }
  const Integer total = spec.total_dimension();
  if (largest == 0) {
    return total;
  }
  Integer k;
  const Integer square = largest * largest;
  mpz_fdiv_q(k.get_mpz_t(), total.get_mpz_t(), square.get_mpz_t());
  return k;
}

BoundVerdict pure_singleton_check(const CodeParams& params) {
  params.validate();
  const Integer max_k = pure_singleton_max_k(params.spec, params.distance);
  BoundVerdict v;
  v.bound_name = "pure_singleton";
  v.lhs = Rational(params.code_dimension);
  v.rhs = Rational(max_k);
  v.holds = params.code_dimension <= max_k;
  return v;
}

std::vector<BoundVerdict> scott_check(const DimensionSpec& spec) { return scott_check(spec.multiset()); }

std::vector<BoundVerdict> scott_check(const DimensionMultiset& system) {
  const SubMultisetLattice lattice(system);
  const Integer total = dim_of(system);
  std::vector<BoundVerdict> verdicts;
  std::vector<int> digits(lattice.slots());
  for (std::size_t w1 = 0; w1 < lattice.size(); ++w1) {
    if (at_most_half(lattice.dim_at(w1), total)) {
      continue;
    }
    // Every proper sub-multiset of w1 must be small; checking the maximal ones suffices.
    bool minimal = true;
    for (std::size_t slot = 0; slot < lattice.slots() && minimal; ++slot) {
      digits = lattice.digits(w1);
      if (digits[slot] == 0) {
        continue;
      }
      --digits[slot];
      minimal = at_most_half(lattice.dim_at(lattice.index_of_digits(digits)), total);
    }
    if (!minimal) {
      continue;
    }
    for (std::size_t w2 = 0; w2 < lattice.size(); ++w2) {
      if (w2 == w1 || !lattice.contains(w1, w2)) {
        continue;
      }
      bool admissible = true;
      for (std::size_t slot = 0; slot < lattice.slots() && admissible; ++slot) {
        digits = lattice.digits(w2);
        if (digits[slot] == 0) {
          continue;
        }
        --digits[slot];
        const std::size_t sub = lattice.index_of_digits(digits);
        admissible = sub == w1 || at_most_half(lattice.dim_at(sub), total);
      }
      if (!admissible) {
        continue;
      }
      const Integer d1 = lattice.dim_at(w1);
      const Integer d2 = lattice.dim_at(w2);
      Integer multiplicity = 1;
      for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
        multiplicity *= binomial(lattice.digit(w2, slot), lattice.digit(w1, slot));
      }
      BoundVerdict v;
      v.bound_name = "scott";
      v.lhs = Rational(d2 * d2, total) - 1;
      v.lhs.canonicalize();
      Rational ratio(d1 * d1, total);
      ratio.canonicalize();
      v.rhs = Rational(multiplicity) * (ratio - 1);
      v.holds = v.lhs >= v.rhs;
      v.witness_multisets = {lattice.at(w1), lattice.at(w2)};
      v.witness = lattice.at(w1).to_string() + " < " + lattice.at(w2).to_string();
      verdicts.push_back(std::move(v));
    }
  }
  return verdicts;
}

std::optional<BoundVerdict> scott_violation(const DimensionSpec& spec) { return scott_violation(spec.multiset()); }

std::optional<BoundVerdict> scott_violation(const DimensionMultiset& system) {
  for (auto& v : scott_check(system)) {
    if (!v.holds) {
      return v;
    }
  }
  return std::nullopt;
}

long scott_homogeneous_max_n(long local_dimension, bool even) {
  if (local_dimension < 2) {
    throw std::invalid_argument("local dimension must be at least 2");
  }
  // The inequality fails for every n well past 2 d (d + 1); scan a margin beyond it.
  const long limit = 2 * local_dimension * (local_dimension + 1) + 8;
  long best = -1;
  for (long n = even ? 2 : 1; n <= limit; n += 2) {
    const auto system = DimensionMultiset::from_dimensions(
        std::vector<int>(static_cast<std::size_t>(n), static_cast<int>(local_dimension)));
    if (!scott_violation(system)) {
      best = n;
    }
  }
  return best;
}

}  // namespace qweight
