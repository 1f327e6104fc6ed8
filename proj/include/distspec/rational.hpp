#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace distspec {

using BigInt = mpz_class;
/// Always kept in canonical (reduced, positive denominator) form.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

/// The threshold -0.5858 read as the exact decimal -2929/5000.
Rational lambda2_threshold();

/// Parses "p", "p/q" or a decimal literal such as "-0.5858" into an exact
/// rational. No floating point is involved. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Fixed-point rendering with `digits` decimals, rounding half away from zero.
std::string to_decimal(const Rational& q, int digits);

/// q rounded to `digits` decimals, half away from zero.
Rational round_decimal(const Rational& q, int digits);

Rational pow10(int exponent);

/// Closed interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  double approx() const { return midpoint().get_d(); }
};

}  // namespace distspec
