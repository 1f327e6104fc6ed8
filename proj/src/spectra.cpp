#include "distspec/spectra.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace distspec {

namespace {

// 1 + max |c_i / c_n| bounds every root (Cauchy).
Rational cauchy_bound(const IntPolynomial& p) {
  Rational best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio(abs(p.coeff(i)), abs(p.leading()));
    ratio.canonicalize();
    best = std::max(best, ratio);
  }
  return best + 1;
}

Interval bisect(const RootCounter& counter, int k, Interval current, const Rational& width) {
  while (current.width() > width) {
    Rational mid = current.midpoint();
    mid.canonicalize();
    if (counter.count_greater(mid) >= k) {
      current.lo = std::move(mid);
    } else {
      current.hi = std::move(mid);
    }
  }
  return current;
}

}  // namespace

CertifiedSpectrum::CertifiedSpectrum(const DistanceMatrix& d)
    : order_(d.order()),
      counter_(char_poly_exact(d)),
      // Spectral radius <= max row sum <= (n-1) * max entry.
      radius_(Rational(d.order()) * d.max_entry() + 1) {}

CertifiedSpectrum::CertifiedSpectrum(IntPolynomial char_poly)
    : order_(char_poly.degree()), counter_(char_poly), radius_(cauchy_bound(char_poly)) {
  if (order_ < 1) throw std::invalid_argument("characteristic polynomial must have degree >= 1");
}

Interval CertifiedSpectrum::enclosure(int k, const Rational& width) const {
  if (k < 1 || k > order_) {
    throw std::invalid_argument("eigenvalue index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(order_));
  }
  if (sgn(width) <= 0) throw std::invalid_argument("enclosure width must be positive");
  return bisect(counter_, k, Interval{-radius_, radius_}, width);
}

Interval CertifiedSpectrum::refine(int k, const Interval& current, const Rational& width) const {
  return bisect(counter_, k, current, width);
}

std::strong_ordering CertifiedSpectrum::compare(int k, const CertifiedSpectrum& other, int j) const {
  Rational width(1, 16);
  Interval a = enclosure(k, width);
  Interval b = other.enclosure(j, width);
  std::optional<SturmChain> common;
  const Rational floor_width = make_rational(1, BigInt(1) << 400);
  while (true) {
    if (a.hi <= b.lo) {
      // lambda_k(this) <= a.hi <= b.lo < lambda_j(other)
      return std::strong_ordering::less;
    }
    if (b.hi <= a.lo) return std::strong_ordering::greater;
    // Overlap: equal iff both intervals isolate a single root and a common
    // root of the two polynomials lies in the intersection.
    if (!common) common.emplace(gcd(counter_.square_free_part(), other.counter_.square_free_part()));
    if (common->base().degree() >= 1 && counter_.distinct_in(a.lo, a.hi) == 1 &&
        other.counter_.distinct_in(b.lo, b.hi) == 1 &&
        common->count_in(std::max(a.lo, b.lo), std::min(a.hi, b.hi)) > 0) {
      return std::strong_ordering::equal;
    }
    if (width < floor_width) throw std::runtime_error("eigenvalue comparison failed to separate");
    width /= 256;
    a = refine(k, a, width);
    b = other.refine(j, b, width);
  }
}

SpectrumEnclosure certified_spectrum(const DistanceMatrix& d, const Rational& width) {
  const CertifiedSpectrum spectrum(d);
  SpectrumEnclosure out{{}, width};
  for (int k = 1; k <= d.order(); ++k) out.intervals.push_back(spectrum.enclosure(k, width));
  return out;
}

Interval lambda_k_enclosure(const Graph& g, int k, const Rational& width) {
  if (!is_connected(g)) throw std::domain_error("distance spectrum requires a connected graph");
  if (k < 1 || k > g.order()) {
    throw std::invalid_argument("eigenvalue index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(g.order()));
  }
  return CertifiedSpectrum(distance_matrix(g)).enclosure(k, width);
}

std::string_view to_string(ThresholdSide side) {
  switch (side) {
    case ThresholdSide::Below:
      return "Below";
    case ThresholdSide::AtThreshold:
      return "AtThreshold";
    case ThresholdSide::Above:
      return "Above";
  }
  return "?";
}

ThresholdSide compare_lambda2(const RootCounter& counter, const Rational& t) {
  const int above = counter.count_greater(t);
  if (above >= 2) return ThresholdSide::Above;
  if (above + counter.multiplicity_at(t) >= 2) return ThresholdSide::AtThreshold;
  return ThresholdSide::Below;
}

ThresholdSide compare_lambda2_threshold(const Graph& g) {
  if (g.order() < 2) throw std::domain_error("lambda_2 needs a graph with at least two vertices");
  const RootCounter counter(char_poly_exact(distance_matrix(g)));
  return compare_lambda2(counter, lambda2_threshold());
}

bool interlacing_check(const DistanceMatrix& a, std::span<const Vertex> s) {
  const DistanceMatrix b = a.principal_submatrix(s);
  const int n = a.order();
  const int m = b.order();
  const CertifiedSpectrum full(a);
  const CertifiedSpectrum sub(b);
  for (int i = 1; i <= m; ++i) {
    if (sub.compare(i, full, i) > 0) return false;
    if (full.compare(n - m + i, sub, i) > 0) return false;
  }
  return true;
}

}  // namespace distspec
