#pragma once

#include <vector>

#include "distspec/polynomial.hpp"

namespace distspec {

/// Sturm chain of a square-free polynomial, normalized to primitive parts
/// after every remainder step.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& square_free);

  /// Sign variations of the chain at x (zeros skipped).
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;

  /// Distinct roots strictly greater than t.
  int count_greater(const Rational& t) const;
  /// Distinct roots in the closed interval [lo, hi].
  int count_in(const Rational& lo, const Rational& hi) const;

  const IntPolynomial& base() const { return chain_.front(); }
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Certified real-root counting with multiplicity, built once per polynomial
/// from its square-free decomposition.
class RootCounter {
 public:
  /// Throws std::domain_error for the zero polynomial.
  explicit RootCounter(const IntPolynomial& p);

  /// Real roots strictly greater than t, counted with multiplicity.
  int count_greater(const Rational& t) const;
  /// Multiplicity of t as a root (0 if p(t) != 0).
  int multiplicity_at(const Rational& t) const;
  /// Number of real roots counted with multiplicity.
  int real_root_count() const;
  /// Distinct real roots in [lo, hi].
  int distinct_in(const Rational& lo, const Rational& hi) const;

  /// Product of the square-free factors (the square-free part of p).
  const IntPolynomial& square_free_part() const { return square_free_; }
  const IntPolynomial& polynomial() const { return poly_; }

 private:
  struct Factor {
    SturmChain chain;
    int multiplicity;
  };

  IntPolynomial poly_;
  IntPolynomial square_free_;
  std::vector<Factor> factors_;
};

/// Real roots of p strictly greater than t, with multiplicity.
int sturm_count_greater(const IntPolynomial& p, const Rational& t);

}  // namespace distspec
