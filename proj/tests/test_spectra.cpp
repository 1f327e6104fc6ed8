#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "distspec/canonical.hpp"
#include "distspec/family.hpp"
#include "distspec/spectra.hpp"
#include "oracles.hpp"

using namespace distspec;

namespace {

const Rational kWidth = make_rational(1, 1000000000);
const Rational kT = lambda2_threshold();

// Closed-form value a + b * sqrt(c) evaluated in long double for tolerance checks.
long double surd(long double a, long double b, long double c) { return a + b * std::sqrt(c); }

}  // namespace

TEST_CASE("characteristic polynomials of small graphs") {
  CHECK(char_poly_exact(distance_matrix(complete(2))) == IntPolynomial{-1, 0, 1});
  CHECK(char_poly_exact(distance_matrix(path(3))) == IntPolynomial{-4, -6, 0, 1});
  CHECK(char_poly_exact(distance_matrix(complete(3))) == IntPolynomial{-2, -3, 0, 1});
  CHECK(char_poly_exact(distance_matrix(complete(1))) == IntPolynomial{0, 1});
  // C4 spectrum {4, 0, -2, -2}.
  CHECK(char_poly_exact(distance_matrix(cycle(4))) == IntPolynomial{0, -16, -12, 0, 1});
}

TEST_CASE("characteristic polynomial matches Bareiss determinants") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> order(1, 8);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    const Graph g = oracle::random_connected(order(rng), density(rng), rng);
    const IntPolynomial p = char_poly_exact(distance_matrix(g));
    REQUIRE(p.degree() == g.order());
    CHECK(p.is_monic());
    for (long x : {-7L, -2L, -1L, 0L, 1L, 3L, 11L}) CHECK(p.evaluate(BigInt(x)) == oracle::char_poly_at(g, x));
  }
  // Larger orders, including long paths with big entries.
  for (const Graph& g : {path(40), cycle(37), oracle::random_connected(30, 0.1, rng)}) {
    const IntPolynomial p = char_poly_exact(distance_matrix(g));
    for (long x : {-3L, 0L, 5L}) CHECK(p.evaluate(BigInt(x)) == oracle::char_poly_at(g, x));
  }
}

TEST_CASE("characteristic polynomial of a general symmetric matrix") {
  // [[2, -3], [-3, 5]]: x^2 - 7x + 1.
  const std::vector<long long> m{2, -3, -3, 5};
  CHECK(char_poly_exact(2, m) == IntPolynomial{1, -7, 1});
  const std::vector<long long> short_m{1, 2, 3};
  CHECK_THROWS_AS(char_poly_exact(2, short_m), std::invalid_argument);
}

TEST_CASE("trace zero: no x^(n-1) term") {
  for (const Graph& g : oracle::census(7)) {
    const IntPolynomial p = char_poly_exact(distance_matrix(g));
    CHECK(p.coeff(g.order() - 1) == 0);
  }
}

TEST_CASE("Sturm counts against the threshold") {
  CHECK(sturm_count_greater(char_poly_exact(distance_matrix(complete(4))), kT) == 1);
  CHECK(sturm_count_greater(char_poly_exact(distance_matrix(star(5))), kT) == 1);
  CHECK(sturm_count_greater(char_poly_exact(distance_matrix(path(4))), kT) == 2);
}

TEST_CASE("eigenvalue enclosures around closed forms") {
  struct Case {
    Graph g;
    int k;
    long double expected;
  };
  const std::vector<Case> cases{
      {path(3), 2, surd(1, -1, 3)},
      {path(4), 2, surd(-2, 1, 2)},
      {delete_edge(complete(4), 0, 1), 2, surd(1.5L, -0.5L, 17)},
      {star(4), 2, surd(2, -1, 7)},
      {star(4), 4, -2},
      {star(5), 2, surd(3, -1, 13)},
      {star(6), 2, surd(4, -1, 21)},
      {complete(5), 2, -1},
      {cycle(4), 2, 0},
      {cycle(4), 1, 4},
  };
  for (const auto& c : cases) {
    const Interval iv = lambda_k_enclosure(c.g, c.k, kWidth);
    CHECK(iv.width() <= kWidth);
    CHECK(iv.lo.get_d() - 1e-15 <= static_cast<double>(c.expected));
    CHECK(static_cast<double>(c.expected) <= iv.hi.get_d() + 1e-15);
  }
  const Interval p4 = lambda_k_enclosure(path(4), 2, kWidth);
  CHECK(p4.lo > kT);
  CHECK(to_decimal(p4.midpoint(), 5) == "-0.58579");
}

TEST_CASE("enclosure argument checks") {
  CHECK_THROWS_AS(lambda_k_enclosure(path(3), 0, kWidth), std::invalid_argument);
  CHECK_THROWS_AS(lambda_k_enclosure(path(3), 4, kWidth), std::invalid_argument);
  CHECK_THROWS_AS(lambda_k_enclosure(path(3), 1, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(lambda_k_enclosure(empty_graph(3), 1, kWidth), std::domain_error);
}

TEST_CASE("certified spectrum is ordered and consistent with counts") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(9, 0.4, rng);
    const auto d = distance_matrix(g);
    const auto spec = certified_spectrum(d, make_rational(1, 1 << 20));
    REQUIRE(spec.intervals.size() == 9u);
    const CertifiedSpectrum cs(d);
    for (int k = 1; k <= 9; ++k) {
      const auto& iv = spec.intervals[k - 1];
      CHECK(iv.width() <= spec.width);
      // (lo, hi] contains lambda_k: at least k eigenvalues exceed lo, fewer than k exceed hi.
      CHECK(cs.count_greater(iv.lo) >= k);
      CHECK(cs.count_greater(iv.hi) < k);
      if (k > 1) CHECK(spec.intervals[k - 2].hi >= iv.lo);
    }
  }
}

TEST_CASE("threshold comparison") {
  CHECK(compare_lambda2_threshold(complete(5)) == ThresholdSide::Below);
  CHECK(compare_lambda2_threshold(cycle(4)) == ThresholdSide::Above);
  CHECK(compare_lambda2_threshold(path(4)) == ThresholdSide::Above);
  CHECK(compare_lambda2_threshold(star(5)) == ThresholdSide::Below);
  CHECK(compare_lambda2_threshold(build_graph(CliqueJoinSpec({2, 2, 3, 3}))) == ThresholdSide::Above);
  CHECK_THROWS_AS(compare_lambda2_threshold(complete(1)), std::domain_error);
  CHECK_THROWS_AS(compare_lambda2_threshold(empty_graph(3)), std::domain_error);
}

TEST_CASE("threshold comparison detects exact equality") {
  // Roots 5, -2929/5000 (double) and -3: (x - 5)(5000x + 2929)^2(x + 3).
  const IntPolynomial at{2929, 5000};
  const IntPolynomial p = IntPolynomial::linear_factor(5) * at * at * IntPolynomial{3, 1};
  CHECK(compare_lambda2(RootCounter(p), kT) == ThresholdSide::AtThreshold);
  const IntPolynomial single = IntPolynomial::linear_factor(5) * at * IntPolynomial{3, 1};
  CHECK(compare_lambda2(RootCounter(single), kT) == ThresholdSide::AtThreshold);
  const IntPolynomial above = IntPolynomial::linear_factor(5) * IntPolynomial::linear_factor(0) * at;
  CHECK(compare_lambda2(RootCounter(above), kT) == ThresholdSide::Above);
  const IntPolynomial below = IntPolynomial::linear_factor(5) * IntPolynomial{1, 1} * IntPolynomial{3, 1};
  CHECK(compare_lambda2(RootCounter(below), kT) == ThresholdSide::Below);
}

TEST_CASE("floating spectrum") {
  const auto s4 = float_spectrum(distance_matrix(star(4)));
  REQUIRE(s4.size() == 4u);
  CHECK(s4[0] == doctest::Approx(2 + std::sqrt(7.0)).epsilon(1e-12));
  CHECK(std::abs(s4[1] - (2 - std::sqrt(7.0))) < 1e-9);
  CHECK(std::abs(s4[2] + 2) < 1e-9);
  CHECK(std::abs(s4[3] + 2) < 1e-9);

  const auto c4 = float_spectrum(distance_matrix(cycle(4)));
  const std::vector<double> expected{4, 0, -2, -2};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(c4[i] - expected[i]) < 1e-9);

  const auto g = build_graph(CliqueJoinSpec({1, 1, 1, 2}));
  const auto least = float_spectrum(distance_matrix(g)).back();
  CHECK(std::abs(least - (-2.6288)) < 5e-5);

  CHECK_THROWS_AS(jacobi_eigenvalues(2, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("inertia of shifted distance matrices") {
  CHECK(inertia_shifted(distance_matrix(complete(3)), Rational(-1)) == Inertia{1, 0, 2});
  CHECK(inertia_shifted(distance_matrix(path(4)), kT).positive == 2);
  CHECK(inertia_shifted(distance_matrix(star(5)), kT).positive == 1);
  // All-zero diagonal forces a 2x2 pivot: D(K2) - 0 I.
  CHECK(inertia_shifted(distance_matrix(complete(2)), Rational(0)) == Inertia{1, 1, 0});
  CHECK(inertia_shifted(distance_matrix(cycle(4)), Rational(0)) == Inertia{1, 2, 1});
}

TEST_CASE("Sturm, inertia and Jacobi agree on the census (n <= 7)") {
  for (const Graph& g : oracle::census(7)) {
    const auto d = distance_matrix(g);
    const CertifiedSpectrum cs(d);
    const int sturm = cs.count_greater(kT);
    const Inertia in = inertia_shifted(d, kT);
    REQUIRE(sturm == in.positive);
    CHECK(in.positive + in.negative + in.zero == g.order());
    const auto fl = float_spectrum(d);
    int above = 0;
    for (double v : fl) above += v > kT.get_d() ? 1 : 0;
    CHECK(above == sturm);
  }
}

TEST_CASE("floating eigenvalues lie within 1e-8 of the certified enclosures (n <= 7)") {
  const Rational width = make_rational(1, 1 << 30);
  for (const Graph& g : oracle::census(7)) {
    const auto d = distance_matrix(g);
    const auto fl = float_spectrum(d);
    const auto spec = certified_spectrum(d, width);
    for (std::size_t k = 0; k < fl.size(); ++k) {
      CHECK(fl[k] >= spec.intervals[k].lo.get_d() - 1e-8);
      CHECK(fl[k] <= spec.intervals[k].hi.get_d() + 1e-8);
    }
  }
}

TEST_CASE("exact eigenvalue comparison") {
  const CertifiedSpectrum p4(distance_matrix(path(4)));
  const CertifiedSpectrum k4(distance_matrix(complete(4)));
  const CertifiedSpectrum s4(distance_matrix(star(4)));
  CHECK(p4.compare(2, p4, 2) == std::strong_ordering::equal);
  CHECK(k4.compare(2, k4, 3) == std::strong_ordering::equal);
  CHECK(k4.compare(2, p4, 2) == std::strong_ordering::less);
  CHECK(p4.compare(1, s4, 1) == std::strong_ordering::greater);
  // sqrt(2) - 2 from two different graphs.
  const CertifiedSpectrum surd(distance_matrix(build_graph(CliqueJoinSpec({2, 2, 3, 3}))));
  CHECK(surd.compare(2, p4, 2) == std::strong_ordering::equal);
  CHECK(s4.compare(4, k4, 4) == std::strong_ordering::less);
}

TEST_CASE("interlacing") {
  const auto d = distance_matrix(cycle(5));
  std::vector<Vertex> all{0, 1, 2, 3, 4};
  CHECK(interlacing_check(d, all));

  // K1 v (K1 u 3K2): apex 0, singleton 1, pairs {2,3},{4,5},{6,7}; S4 on {0,1,2,4}.
  const Graph g = build_graph(CliqueJoinSpec({1, 2, 2, 2}));
  const std::vector<Vertex> s{0, 1, 2, 4};
  REQUIRE(is_isometric_induced(g, s));
  CHECK(interlacing_check(distance_matrix(g), s));
  const CertifiedSpectrum big(distance_matrix(g));
  const CertifiedSpectrum small(distance_matrix(star(4)));
  CHECK(big.compare(2, small, 2) != std::strong_ordering::less);

  // A matrix that is not a distance submatrix still interlaces (any symmetric principal submatrix does).
  const std::vector<Vertex> pair{0, 3};
  CHECK(interlacing_check(distance_matrix(path(4)), pair));
}

TEST_CASE("interlacing on every subset of every census graph (n <= 5)") {
  for (const Graph& g : oracle::census(5)) {
    const int n = g.order();
    const auto d = distance_matrix(g);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.push_back(v);
      REQUIRE(interlacing_check(d, s));
    }
  }
}
