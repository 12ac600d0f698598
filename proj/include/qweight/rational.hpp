#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qweight {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a floating-point quantity cannot be identified with a
/// small-denominator rational.
class NumericPrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p/q" or "p". The result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);
double to_double(const Rational& value);

Integer floor(const Rational& value);
Integer power(const Integer& base, unsigned long exponent);

/// Denominator bound used by snap(); QWEIGHT_MAX_DENOM overrides 10^6.
long default_max_denominator();

/// Closest rational with denominator at most max_denominator (continued
/// fractions); throws NumericPrecisionError if it is farther than tolerance.
Rational snap(double value, long max_denominator = default_max_denominator(),
              double tolerance = 1e-7);

}  // namespace qweight
