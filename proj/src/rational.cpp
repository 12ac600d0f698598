#include "qweight/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qweight {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto trim = [](std::string& t) {
    const auto first = t.find_first_not_of(" \t");
    const auto last = t.find_last_not_of(" \t");
    t = first == std::string::npos ? std::string() : t.substr(first, last - first + 1);
  };
  trim(s);
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (den == 0) {
    throw std::invalid_argument("zero denominator in " + s);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

long default_max_denominator() {
  static const long bound = [] {
    if (const char* env = std::getenv("QWEIGHT_MAX_DENOM")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) {
        return parsed;
      }
    }
    return 1'000'000L;
  }();
  return bound;
}

Rational snap(double value, long max_denominator, double tolerance) {
  if (!std::isfinite(value)) {
    throw NumericPrecisionError("cannot snap a non-finite value");
  }
  if (max_denominator < 1) {
    throw std::invalid_argument("max_denominator must be positive");
  }
  const Rational exact(value);
  Rational best;
  if (exact.get_den() <= max_denominator) {
    best = exact;
  } else {
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer n = exact.get_num();
    Integer d = exact.get_den();
    while (true) {
      Integer a;
      mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      const Integer q2 = q0 + a * q1;
      if (q2 > max_denominator) {
        break;
      }
      const Integer p2 = p0 + a * p1;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      const Integer rem = n - a * d;
      n = d;
      d = rem;
    }
    Integer k;
    const Integer slack = Integer(max_denominator) - q0;
    mpz_fdiv_q(k.get_mpz_t(), slack.get_mpz_t(), q1.get_mpz_t());
    const Rational semi(p0 + k * p1, q0 + k * q1);
    const Rational conv(p1, q1);
    best = abs(conv - exact) <= abs(semi - exact) ? conv : semi;
    best.canonicalize();
  }
  if (std::abs(Rational(best - exact).get_d()) >= tolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "value " << value << " has no rational within " << tolerance
        << " with denominator <= " << max_denominator;
    throw NumericPrecisionError(msg.str());
  }
  return best;
}

}  // namespace qweight
