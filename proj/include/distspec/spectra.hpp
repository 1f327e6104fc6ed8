#pragma once

#include <compare>
#include <span>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/polynomial.hpp"
#include "distspec/rational.hpp"
#include "distspec/sturm.hpp"

namespace distspec {

/// det(xI - D), exact. Computed by Hessenberg reduction modulo enough word-size
/// primes to exceed a Hadamard-type coefficient bound, then CRT lifting.
IntPolynomial char_poly_exact(const DistanceMatrix& d);

/// Same, for any symmetric integer matrix given row-major.
IntPolynomial char_poly_exact(int order, std::span<const long long> entries);

/// Certified eigenvalue enclosures of a symmetric integer matrix, driven by
/// Sturm counts on its characteristic polynomial.
class CertifiedSpectrum {
 public:
  explicit CertifiedSpectrum(const DistanceMatrix& d);
  /// From the characteristic polynomial of a symmetric matrix (all roots real).
  explicit CertifiedSpectrum(IntPolynomial char_poly);

  int order() const { return order_; }
  const IntPolynomial& char_poly() const { return counter_.polynomial(); }
  const RootCounter& counter() const { return counter_; }

  /// Eigenvalues strictly greater than t, with multiplicity.
  int count_greater(const Rational& t) const { return counter_.count_greater(t); }

  /// Interval of length <= width containing lambda_k (1-based, non-increasing
  /// order). The true value lies in the half-open (lo, hi].
  Interval enclosure(int k, const Rational& width) const;
  /// Bisects an existing enclosure of lambda_k down to width.
  Interval refine(int k, const Interval& current, const Rational& width) const;

  /// Exact comparison of lambda_k of this spectrum with lambda_j of other.
  std::strong_ordering compare(int k, const CertifiedSpectrum& other, int j) const;

 private:
  int order_;
  RootCounter counter_;
  Rational radius_;
};

struct SpectrumEnclosure {
  std::vector<Interval> intervals;  // non-increasing, one per eigenvalue
  Rational width;
};

SpectrumEnclosure certified_spectrum(const DistanceMatrix& d, const Rational& width);

/// Enclosure of the k-th distance eigenvalue of a connected graph. Throws
/// std::domain_error for a disconnected graph, std::invalid_argument for k out
/// of range or a nonpositive width.
Interval lambda_k_enclosure(const Graph& g, int k, const Rational& width);

enum class ThresholdSide { Below, AtThreshold, Above };

std::string_view to_string(ThresholdSide side);

/// Position of lambda_2 relative to t, from exact root counts only.
ThresholdSide compare_lambda2(const RootCounter& counter, const Rational& t);

/// Position of lambda_2(g) relative to -2929/5000. Requires a connected graph
/// with at least two vertices (std::domain_error otherwise).
ThresholdSide compare_lambda2_threshold(const Graph& g);

/// Eigenvalues in non-increasing order by cyclic Jacobi rotations. Stops when
/// the off-diagonal Frobenius norm drops below 1e-12 times the max-norm;
/// throws std::runtime_error if the sweep cap is hit first. Not used for any
/// certified decision.
std::vector<double> float_spectrum(const DistanceMatrix& d);
std::vector<double> jacobi_eigenvalues(int order, std::vector<double> matrix);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool operator==(const Inertia&) const = default;
};

/// Inertia of D - tI by exact rational symmetric elimination (Sylvester's law
/// of inertia).
Inertia inertia_shifted(const DistanceMatrix& d, const Rational& t);

/// Whether the principal submatrix on s interlaces the full matrix, decided
/// exactly by comparing certified eigenvalues.
bool interlacing_check(const DistanceMatrix& a, std::span<const Vertex> s);

}  // namespace distspec
