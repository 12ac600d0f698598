#include "qweight/transforms.hpp"

#include <sstream>
#include <stdexcept>

namespace qweight {
namespace {

using Factor = KroneckerKernel::Factor;

template <typename Fn>
std::vector<Factor> build_factors(const SubMultisetLattice& lattice, Fn&& fn) {
  std::vector<Factor> factors;
  for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
    const int d = lattice.dimensions()[slot];
    const int cap = lattice.capacities()[slot];
    Factor f(static_cast<std::size_t>(cap + 1), std::vector<Rational>(static_cast<std::size_t>(cap + 1)));
    for (int row = 0; row <= cap; ++row) {
      for (int col = 0; col <= cap; ++col) {
        f[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = fn(d, cap, row, col);
      }
    }
    factors.push_back(std::move(f));
  }
  return factors;
}

Rational to_rational(const Integer& z) { return Rational(z); }

EnumeratorProfile apply_kernel(const KroneckerKernel& kernel, const EnumeratorProfile& in, Family expected,
                               Family produced) {
  if (in.family() != expected) {
    throw std::invalid_argument("expected a " + std::string(family_name(expected)) + " profile, got " +
                                std::string(family_name(in.family())));
  }
  return EnumeratorProfile(produced, in.spec(), kernel.apply(in.values()));
}

}  // namespace

Integer krawtchouk(int j, int k, int n) { return krawtchouk_general(j, k, n, 1, 1); }

Integer krawtchouk_general(int j, int k, int n, const Integer& gamma, const Integer& delta) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("krawtchouk requires 0 <= k <= n");
  }
  Integer total = 0;
  for (int alpha = 0; alpha <= j; ++alpha) {
    const Integer c = binomial(n - k, j - alpha) * binomial(k, alpha);
    if (c == 0) {
      continue;
    }
    const Integer term = c * power(gamma, static_cast<unsigned long>((n - k) - (j - alpha))) *
                         power(delta, static_cast<unsigned long>(j - alpha));
    total += alpha % 2 ? -term : term;
  }
  return total;
}

KroneckerKernel::KroneckerKernel(SubMultisetLattice lattice, std::vector<Factor> factors, Rational scale)
    : lattice_(std::move(lattice)), factors_(std::move(factors)), scale_(std::move(scale)) {
  if (factors_.size() != lattice_.slots()) {
    throw std::invalid_argument("one factor per distinct dimension is required");
  }
}

Rational KroneckerKernel::entry(std::size_t row, std::size_t column) const {
  Rational value = scale_;
  for (std::size_t slot = 0; slot < factors_.size() && value != 0; ++slot) {
    value *= factors_[slot][static_cast<std::size_t>(lattice_.digit(row, slot))]
                        [static_cast<std::size_t>(lattice_.digit(column, slot))];
  }
  return value;
}

std::vector<Rational> KroneckerKernel::apply(std::span<const Rational> values) const {
  if (values.size() != size()) {
    throw std::invalid_argument("vector length does not match the kernel");
  }
  std::vector<Rational> out(size());
  for (std::size_t row = 0; row < size(); ++row) {
    Rational sum = 0;
    for (std::size_t col = 0; col < size(); ++col) {
      if (values[col] != 0) {
        sum += entry(row, col) * values[col];
      }
    }
    out[row] = sum;
  }
  return out;
}

std::vector<std::vector<Rational>> KroneckerKernel::dense() const {
  std::vector<std::vector<Rational>> out(size(), std::vector<Rational>(size()));
  for (std::size_t row = 0; row < size(); ++row) {
    for (std::size_t col = 0; col < size(); ++col) {
      out[row][col] = entry(row, col);
    }
  }
  return out;
}

KroneckerKernel b_from_a_kernel(const DimensionMultiset& total) {
  SubMultisetLattice lattice(total);
  auto factors = build_factors(lattice, [](int d, int cap, int row, int col) -> Rational {
    return to_rational(krawtchouk_general(row, col, cap, 1, Integer(d * d - 1)));
  });
  return KroneckerKernel(std::move(lattice), std::move(factors), Rational(1) / Rational(dim_of(total)));
}

KroneckerKernel s_from_a_kernel(const DimensionMultiset& total) {
  SubMultisetLattice lattice(total);
  auto factors = build_factors(lattice, [](int d, int cap, int row, int col) -> Rational {
    const Integer k = krawtchouk_general(row, col, cap, Integer(d - 1), Integer(d + 1));
    return to_rational(col % 2 ? -k : k);
  });
  return KroneckerKernel(std::move(lattice), std::move(factors), Rational(1) / Rational(dim_of(total)));
}

KroneckerKernel a_unitary_from_a_kernel(const DimensionMultiset& total) {
  SubMultisetLattice lattice(total);
  auto factors = build_factors(lattice, [](int d, int cap, int row, int col) -> Rational {
    return Rational(binomial(cap - col, row - col)) / Rational(power(Integer(d), static_cast<unsigned long>(row)));
  });
  return KroneckerKernel(std::move(lattice), std::move(factors), Rational(1));
}

KroneckerKernel a_from_a_unitary_kernel(const DimensionMultiset& total) {
  SubMultisetLattice lattice(total);
  auto factors = build_factors(lattice, [](int d, int cap, int row, int col) -> Rational {
    const Integer c = binomial(cap - col, row - col) * power(Integer(d), static_cast<unsigned long>(col));
    return to_rational((row - col) % 2 ? -c : c);
  });
  return KroneckerKernel(std::move(lattice), std::move(factors), Rational(1));
}

KroneckerKernel s_from_a_unitary_kernel(const DimensionMultiset& total) {
  SubMultisetLattice lattice(total);
  auto factors = build_factors(lattice, [](int, int cap, int row, int col) -> Rational {
    return to_rational(krawtchouk(cap - row, col, cap));
  });
  return KroneckerKernel(std::move(lattice), std::move(factors), Rational(1));
}

EnumeratorProfile b_from_a(const EnumeratorProfile& a) {
  return apply_kernel(b_from_a_kernel(a.spec().multiset()), a, Family::A, Family::B);
}

EnumeratorProfile s_from_a(const EnumeratorProfile& a) {
  return apply_kernel(s_from_a_kernel(a.spec().multiset()), a, Family::A, Family::S);
}

EnumeratorProfile a_unitary_from_a(const EnumeratorProfile& a) {
  return apply_kernel(a_unitary_from_a_kernel(a.spec().multiset()), a, Family::A, Family::APrime);
}

EnumeratorProfile a_from_a_unitary(const EnumeratorProfile& a_unitary) {
  return apply_kernel(a_from_a_unitary_kernel(a_unitary.spec().multiset()), a_unitary, Family::APrime, Family::A);
}

EnumeratorProfile shadow_from_a_unitary(const EnumeratorProfile& a_unitary) {
  return apply_kernel(s_from_a_unitary_kernel(a_unitary.spec().multiset()), a_unitary, Family::APrime, Family::S);
}

EnumeratorProfile transform_to(const EnumeratorProfile& profile, Family target) {
  const Family from = profile.family();
  if (from == Family::A && target == Family::B) {
    return b_from_a(profile);
  }
  if (from == Family::A && target == Family::S) {
    return s_from_a(profile);
  }
  if (from == Family::A && target == Family::APrime) {
    return a_unitary_from_a(profile);
  }
  if (from == Family::APrime && target == Family::A) {
    return a_from_a_unitary(profile);
  }
  if (from == Family::APrime && target == Family::S) {
    return shadow_from_a_unitary(profile);
  }
  throw std::invalid_argument("no transform from " + std::string(family_name(from)) + " to " +
                              std::string(family_name(target)));
}

KroneckerKernel kernel_by_kind(const DimensionMultiset& total, std::string_view kind) {
  if (kind == "B") {
    return b_from_a_kernel(total);
  }
  if (kind == "S") {
    return s_from_a_kernel(total);
  }
  if (kind == "A'" || kind == "Ap") {
    return a_unitary_from_a_kernel(total);
  }
  if (kind == "A") {
    return a_from_a_unitary_kernel(total);
  }
  if (kind == "S'" || kind == "Sp") {
    return s_from_a_unitary_kernel(total);
  }
  throw std::invalid_argument("unknown kernel kind " + std::string(kind));
}

Rational evaluate_enumerator(const EnumeratorProfile& profile, const EvaluationPoint& point) {
  const auto& lattice = profile.lattice();
  for (const int d : lattice.dimensions()) {
    if (!point.contains(d)) {
      throw std::invalid_argument("evaluation point misses dimension " + std::to_string(d));
    }
  }
  Rational total = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (profile[i] == 0) {
      continue;
    }
    Rational term = profile[i];
    for (std::size_t slot = 0; slot < lattice.slots(); ++slot) {
      const auto& [x, y] = point.at(lattice.dimensions()[slot]);
      const int m = lattice.digit(i, slot);
      const int rest = lattice.capacities()[slot] - m;
      Rational xp = 1;
      Rational yp = 1;
      mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(rest));
      mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(rest));
      mpz_pow_ui(yp.get_num_mpz_t(), y.get_num_mpz_t(), static_cast<unsigned long>(m));
      mpz_pow_ui(yp.get_den_mpz_t(), y.get_den_mpz_t(), static_cast<unsigned long>(m));
      term *= xp * yp;
    }
    total += term;
  }
  return total;
}

bool macwilliams_eval_check(const EnumeratorProfile& a, const EnumeratorProfile& b, const EvaluationPoint& point) {
  if (!(a.spec().multiset() == b.spec().multiset())) {
    throw std::invalid_argument("profiles belong to different systems");
  }
  EvaluationPoint transformed;
  for (const auto& [d, xy] : point) {
    const auto& [x, y] = xy;
    transformed[d] = {(x + Rational(d * d - 1) * y) / Rational(d), (x - y) / Rational(d)};
  }
  return evaluate_enumerator(a, point) == evaluate_enumerator(b, transformed);
}

std::string kernel_csv(const KroneckerKernel& kernel) {
  std::ostringstream out;
  for (std::size_t row = 0; row < kernel.size(); ++row) {
    for (std::size_t col = 0; col < kernel.size(); ++col) {
      out << (col ? "," : "") << to_string(kernel.entry(row, col));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qweight
