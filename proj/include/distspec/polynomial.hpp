#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "distspec/rational.hpp"

namespace distspec {

/// Univariate polynomial with arbitrary-precision integer coefficients, stored
/// in ascending degree order with no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  /// x - root
  static IntPolynomial linear_factor(const BigInt& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rational evaluate(const Rational& x) const;
  BigInt evaluate(const BigInt& x) const;
  /// Sign of p(x), computed from b^deg * p(a/b) without division.
  int sign_at(const Rational& x) const;
  /// Sign of p(x) as x -> +inf (positive = true) or x -> -inf.
  int sign_at_infinity(bool positive) const;

  IntPolynomial derivative() const;
  BigInt content() const;
  /// Content removed and leading coefficient made positive.
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

  IntPolynomial pow(unsigned exponent) const;

  /// "x^3 - 6*x - 4" style rendering.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q * b + r.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b when b divides a over the rationals and the quotient has
/// integer coefficients. Throws std::domain_error otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive greatest common divisor with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Square-free decomposition p = c * prod_i factors[i].first^factors[i].second
/// (Yun). Factors are primitive, square-free, pairwise coprime, nonconstant.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);

}  // namespace distspec
