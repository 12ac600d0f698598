#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"
#include "../support/properties.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/transforms.hpp"

using namespace qweight;

namespace {

DimensionMultiset ms(std::initializer_list<int> dims) { return DimensionMultiset::from_dimensions(dims); }

Rational q(long p, long d = 1) { return make_rational(p, d); }

EnumeratorProfile bundled_a(const std::string& name) {
  const auto state = fixtures::bundled_state(name);
  return shor_laflamme_profiles(state, state).first;
}

EnumeratorProfile random_profile(Family family, const DimensionSpec& spec, oracle::Rng& rng) {
  auto profile = EnumeratorProfile::zeros(family, spec);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    profile[i] = oracle::random_rational(rng, 20, 9);
  }
  return profile;
}

// Direct expansion of sum_a (-1)^a C(n-k, j-a) C(k, a) g^((n-k)-(j-a)) h^(j-a).
Integer krawtchouk_by_sum(int j, int k, int n, long g, long h) {
  Integer total = 0;
  for (int a = 0; a <= j; ++a) {
    Integer term = binomial(n - k, j - a) * binomial(k, a);
    if (term == 0) {
      continue;
    }
    term *= power(Integer(g), static_cast<unsigned long>(std::max(0, (n - k) - (j - a))));
    term *= power(Integer(h), static_cast<unsigned long>(j - a));
    total += a % 2 ? -term : term;
  }
  return total;
}

}  // namespace

TEST_CASE("Krawtchouk polynomials") {
  for (int k = 0; k <= 5; ++k) {
    CHECK(krawtchouk(0, k, 5) == 1);
  }
  CHECK(krawtchouk(1, 0, 3) == 3);
  CHECK(krawtchouk(2, 1, 2) == -1);
  for (int n = 0; n <= 6; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        CHECK(krawtchouk_general(j, k, n, 1, 1) == krawtchouk(j, k, n));
        CHECK(krawtchouk_general(j, k, n, 2, 5) == krawtchouk_by_sum(j, k, n, 2, 5));
      }
      CHECK(krawtchouk_general(j, 0, n, 1, 3) == binomial(n, j) * power(Integer(3), static_cast<unsigned long>(j)));
    }
  }
  // sum_j K~_j x^(n-j) y^j = (g x + h y)^(n-k) (x - y)^k at x = 1, y = 2.
  Integer lhs = 0;
  for (int j = 0; j <= 3; ++j) {
    lhs += krawtchouk_general(j, 1, 3, 1, 3) * power(Integer(2), static_cast<unsigned long>(j));
  }
  CHECK(lhs == power(Integer(1 + 3 * 2), 2) * (1 - 2));
}

TEST_CASE("single-qubit transforms") {
  const DimensionSpec qubit{2};
  const EnumeratorProfile a(Family::A, qubit, {q(1), q(0)});
  const auto b = b_from_a(a);
  CHECK(b.family() == Family::B);
  CHECK(b.at({}) == q(1, 2));
  CHECK(b.at(ms({2})) == q(3, 2));

  const EnumeratorProfile ap(Family::APrime, qubit, {q(1), q(0)});
  const auto back = a_from_a_unitary(ap);
  CHECK(back.at({}) == 1);
  CHECK(back.at(ms({2})) == -1);
}

TEST_CASE("transforms of the bundled states") {
  const auto a2333 = bundled_a("ame2333");
  CHECK(b_from_a(a2333).values().size() == a2333.size());
  CHECK(std::equal(a2333.values().begin(), a2333.values().end(), b_from_a(a2333).values().begin()));
  CHECK(a_unitary_from_a(a2333).at(ms({2, 3})) == q(1, 2));
  CHECK(a_unitary_from_a(a2333).at({}) == a2333.at({}));
  CHECK(a_from_a_unitary(a_unitary_from_a(a2333)) == a2333);
  CHECK(a_from_a_unitary(a_unitary_from_a(a2333)).at(ms({3, 3})) == q(3, 2));

  const auto s234 = s_from_a(bundled_a("ame234"));
  CHECK(s234.at(ms({2})) == q(11, 6));
  CHECK(s234.at(ms({4})) == q(5, 6));
  CHECK(s234.at(ms({2, 3, 4})) == q(25, 6));

  const auto s334 = s_from_a(bundled_a("ame334"));
  CHECK(s334.at(ms({3})) == 3);
  CHECK(s334.at(ms({4})) == q(7, 6));
  CHECK(s334.at(ms({3, 3, 4})) == q(23, 6));

  const auto a344 = bundled_a("ame344");
  const auto s344 = s_from_a(a344);
  CHECK(s344.at(ms({3})) == q(5, 3));
  CHECK(s344.at(ms({4})) == q(8, 3));
  CHECK(s344.at(ms({3, 4, 4})) == q(11, 3));
  CHECK(a_unitary_from_a(a344).at(ms({4, 4})) == q(1, 3));

  const auto ap223 = a_unitary_from_a(bundled_a("ame223"));
  CHECK(shadow_from_a_unitary(ap223).at(ms({2})) == q(8, 3));
  const auto ap233 = a_unitary_from_a(bundled_a("ame233"));
  CHECK(shadow_from_a_unitary(ap233).at(ms({3})) == 2);
}

TEST_CASE("transforms reject the wrong family") {
  const auto b = EnumeratorProfile::zeros(Family::B, DimensionSpec{2, 3});
  CHECK_THROWS_AS(b_from_a(b), std::invalid_argument);
  CHECK_THROWS_AS(s_from_a(b), std::invalid_argument);
  CHECK_THROWS_AS(a_from_a_unitary(b), std::invalid_argument);
  CHECK_THROWS_AS(shadow_from_a_unitary(b), std::invalid_argument);
  CHECK_THROWS_AS(transform_to(b, Family::S), std::invalid_argument);
  CHECK_THROWS_AS(transform_to(bundled_a("ame234"), Family::BPrime), std::invalid_argument);
}

TEST_CASE("transform dispatch matches the direct transforms") {
  const auto a = bundled_a("ame234");
  const auto ap = a_unitary_from_a(a);
  CHECK(transform_to(a, Family::B) == b_from_a(a));
  CHECK(transform_to(a, Family::S) == s_from_a(a));
  CHECK(transform_to(a, Family::APrime) == ap);
  CHECK(transform_to(ap, Family::A) == a);
  CHECK(transform_to(ap, Family::S) == shadow_from_a_unitary(ap));

  const auto total = ms({2, 3, 4});
  CHECK(kernel_csv(kernel_by_kind(total, "B")) == kernel_csv(b_from_a_kernel(total)));
  CHECK(kernel_csv(kernel_by_kind(total, "S")) == kernel_csv(s_from_a_kernel(total)));
  CHECK(kernel_csv(kernel_by_kind(total, "A'")) == kernel_csv(a_unitary_from_a_kernel(total)));
  CHECK(kernel_csv(kernel_by_kind(total, "A")) == kernel_csv(a_from_a_unitary_kernel(total)));
  CHECK(kernel_csv(kernel_by_kind(total, "S'")) == kernel_csv(s_from_a_unitary_kernel(total)));
  CHECK_THROWS_AS(kernel_by_kind(total, "X"), std::invalid_argument);
}

TEST_CASE("kernels of a unitary pair invert each other") {
  for (const auto& total : {ms({2, 3, 3}), ms({2, 2, 4}), ms({3, 4, 4, 4})}) {
    const auto forward = a_unitary_from_a_kernel(total).dense();
    const auto backward = a_from_a_unitary_kernel(total).dense();
    const std::size_t n = forward.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
          sum += forward[i][k] * backward[k][j];
        }
        CHECK(sum == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("the MacWilliams kernel is an involution") {
  // (x, y) -> ((x + (d^2-1) y)/d, (x-y)/d) squares to the identity.
  oracle::Rng rng(42);
  const DimensionSpec spec{2, 3, 3};
  const auto a = random_profile(Family::A, spec, rng);
  const auto b = b_from_a(a);
  const auto twice = b_from_a(EnumeratorProfile(Family::A, spec, std::vector<Rational>(b.values().begin(), b.values().end())));
  CHECK(std::equal(twice.values().begin(), twice.values().end(), a.values().begin()));
}

TEST_CASE("shadow from A' equals shadow from A after inversion") {
  oracle::Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const DimensionSpec spec = oracle::random_spec(rng, 4, 256);
    const auto ap = random_profile(Family::APrime, spec, rng);
    CHECK(shadow_from_a_unitary(ap).values().size() == ap.size());
    const auto via_a = s_from_a(a_from_a_unitary(ap));
    const auto direct = shadow_from_a_unitary(ap);
    CHECK(std::equal(via_a.values().begin(), via_a.values().end(), direct.values().begin()));
  }
}

TEST_CASE("MacWilliams evaluation") {
  const auto state = fixtures::bundled_state("ame234");
  const auto [a, b] = shor_laflamme_profiles(state, state);
  const EvaluationPoint ones{{2, {q(1), q(1)}}, {3, {q(1), q(1)}}, {4, {q(1), q(1)}}};
  CHECK(macwilliams_eval_check(a, b, ones));
  const EvaluationPoint corner{{2, {q(1), q(0)}}, {3, {q(1), q(0)}}, {4, {q(1), q(0)}}};
  CHECK(macwilliams_eval_check(a, b, corner));
  CHECK(evaluate_enumerator(a, corner) == a.at({}));
  CHECK_THROWS(evaluate_enumerator(a, EvaluationPoint{{2, {q(1), q(1)}}}));

  // Perturbing B breaks the identity at a generic point.
  auto wrong = b;
  wrong[1] += 1;
  const EvaluationPoint generic{{2, {q(2, 3), q(-1, 5)}}, {3, {q(4), q(1, 7)}}, {4, {q(-3, 2), q(5, 3)}}};
  CHECK(macwilliams_eval_check(a, b, generic));
  CHECK_FALSE(macwilliams_eval_check(a, wrong, generic));
  CHECK(evaluate_enumerator(a, generic) == oracle::evaluate(a, generic));
}

TEST_CASE("two-site MacWilliams at random points") {
  oracle::Rng rng(88);
  for (int trial = 0; trial < 10; ++trial) {
    const DimensionSpec spec = oracle::random_spec(rng, 2, 16);
    const auto state = oracle::random_gaussian_state(spec, rng);
    const auto [a, b] = shor_laflamme_profiles(state, state);
    EvaluationPoint point;
    EvaluationPoint image;
    for (const auto& [d, m] : spec.multiset().entries()) {
      const Rational x = oracle::random_rational(rng, 7, 7);
      const Rational y = oracle::random_rational(rng, 7, 7);
      point[d] = {x, y};
      image[d] = {(x + (d * d - 1) * y) / d, (x - y) / d};
    }
    CHECK(oracle::evaluate(b, point) == oracle::evaluate(a, image));
    CHECK(macwilliams_eval_check(a, b, point));
  }
}

TEST_CASE("kernel CSV export") {
  // Rows and columns {}, {2}, {3}, {2,3}; entries K~_j(k) per dimension over 6.
  const auto csv = kernel_csv(b_from_a_kernel(ms({2, 3})));
  CHECK(csv == "1/6,1/6,1/6,1/6\n1/2,-1/6,1/2,-1/6\n4/3,4/3,-1/6,-1/6\n4,-4/3,-1/2,1/6\n");
}

TEST_CASE("transform property suite (small)") {
  const auto tally = oracle::transform_properties(2024, 12, 5, 3);
  for (const auto& failure : tally.failures) {
    FAIL_CHECK(failure);
  }
  CHECK(tally.passed());
}

TEST_CASE("projector property suite (small)") {
  const auto tally = oracle::projector_properties(2025, 10, 3);
  for (const auto& failure : tally.failures) {
    FAIL_CHECK(failure);
  }
  CHECK(tally.passed());
}
