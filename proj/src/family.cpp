#include "distspec/family.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

#include "distspec/spectra.hpp"

namespace distspec {

namespace {

// Elementary symmetric polynomials e_0..e_m of the parameters.
std::vector<BigInt> elementary(std::span<const BigInt> xs) {
  std::vector<BigInt> e(xs.size() + 1, 0);
  e[0] = 1;
  for (const auto& x : xs) {
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * x;
  }
  return e;
}

// Leading-first coefficient list {1, -a_1, -a_2, ...} to ascending IntPolynomial.
IntPolynomial monic_minus(std::vector<BigInt> subtracted) {
  std::vector<BigInt> asc(subtracted.size() + 1);
  asc.back() = 1;
  for (std::size_t i = 0; i < subtracted.size(); ++i) {
    asc[subtracted.size() - 1 - i] = -subtracted[i];
  }
  return IntPolynomial(std::move(asc));
}

void require_positive(std::span<const CliqueSize> sizes) {
  for (auto n : sizes) {
    if (n < 1) throw std::invalid_argument("clique sizes must be at least 1, got " + std::to_string(n));
  }
}

std::vector<BigInt> to_big(std::span<const CliqueSize> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(static_cast<long>(x));
  return out;
}

FamilyPolynomial build(FamilyKind kind, std::vector<CliqueSize> params) {
  require_positive(params);
  const auto big = to_big(params);
  return {kind, std::move(params), family_coefficients(kind, big)};
}

}  // namespace

CliqueJoinSpec::CliqueJoinSpec(std::vector<CliqueSize> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2 || sizes_.size() > 4) {
    throw std::invalid_argument("clique-join spec needs 2 to 4 parts, got " + std::to_string(sizes_.size()));
  }
  require_positive(sizes_);
  std::sort(sizes_.begin(), sizes_.end());
}

CliqueSize CliqueJoinSpec::order() const {
  return 1 + std::accumulate(sizes_.begin(), sizes_.end(), CliqueSize{0});
}

Graph build_graph(const CliqueJoinSpec& spec) {
  if (spec.order() > kMaxOrder) {
    throw std::invalid_argument("clique-join graph of order " + std::to_string(spec.order()) +
                                " exceeds the explicit graph limit");
  }
  GraphBuilder b(static_cast<int>(spec.order()));
  const Vertex apex = 0;
  Vertex next = 1;
  for (auto size : spec.sizes()) {
    const Vertex first = next;
    next += static_cast<Vertex>(size);
    for (Vertex u = first; u < next; ++u) {
      b.add_edge(apex, u);
      for (Vertex v = u + 1; v < next; ++v) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::F:
      return "f";
    case FamilyKind::G4:
      return "g";
    case FamilyKind::H:
      return "h";
    case FamilyKind::R:
      return "r";
    case FamilyKind::S:
      return "s";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(name[0]))) {
      case 'f':
        return FamilyKind::F;
      case 'g':
        return FamilyKind::G4;
      case 'h':
        return FamilyKind::H;
      case 'r':
        return FamilyKind::R;
      case 's':
        return FamilyKind::S;
    }
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected f, g, h, r or s)");
}

int parameter_count(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::F:
      return 2;
    case FamilyKind::G4:
      return 3;
    case FamilyKind::H:
      return 4;
    case FamilyKind::R:
      return 2;
    case FamilyKind::S:
      return 1;
  }
  return 0;
}

IntPolynomial family_coefficients(FamilyKind kind, std::span<const BigInt> params) {
  if (static_cast<int>(params.size()) != parameter_count(kind)) {
    throw std::invalid_argument("family " + std::string(to_string(kind)) + " takes " +
                                std::to_string(parameter_count(kind)) + " parameters");
  }
  switch (kind) {
    case FamilyKind::F: {
      const BigInt& n1 = params[0];
      const BigInt& n2 = params[1];
      return monic_minus({n1 + n2 - 2, 3 * n1 * n2 + 2 * n1 + 2 * n2 - 1, 2 * n1 * n2 + n1 + n2});
    }
    case FamilyKind::G4: {
      const auto e = elementary(params);
      return monic_minus({e[1] - 3, 3 * (e[2] + e[1] - 1), 5 * (e[2] + e[3]) + 3 * e[1] - 1,
                          3 * e[3] + 2 * e[2] + e[1]});
    }
    case FamilyKind::H: {
      const auto e = elementary(params);
      return monic_minus({e[1] - 4, 3 * e[2] + 4 * e[1] - 6, 5 * e[3] + 8 * e[2] + 6 * e[1] - 4,
                          7 * e[4] + 8 * e[3] + 7 * e[2] + 4 * e[1] - 1,
                          4 * e[4] + 3 * e[3] + 2 * e[2] + e[1]});
    }
    case FamilyKind::R: {
      const BigInt& n3 = params[0];
      const BigInt& n4 = params[1];
      return monic_minus({n3 + n4, 3 * n3 * n4 + 8 * n3 + 8 * n4 + 5, 12 * n3 * n4 + 11 * n3 + 11 * n4 + 6,
                          6 * n3 * n4 + 4 * n3 + 4 * n4 + 2});
    }
    case FamilyKind::S: {
      const BigInt& n4 = params[0];
      return monic_minus({n4 + 4, 16 * n4 + 26, 38 * n4 + 32, 17 * n4 + 11});
    }
  }
  throw std::invalid_argument("unknown family kind");
}

FamilyPolynomial poly_f(CliqueSize n1, CliqueSize n2) { return build(FamilyKind::F, {n1, n2}); }

FamilyPolynomial poly_g(CliqueSize n1, CliqueSize n2, CliqueSize n3) {
  return build(FamilyKind::G4, {n1, n2, n3});
}

FamilyPolynomial poly_h(CliqueSize n1, CliqueSize n2, CliqueSize n3, CliqueSize n4) {
  return build(FamilyKind::H, {n1, n2, n3, n4});
}

FamilyPolynomial poly_r(CliqueSize n3, CliqueSize n4) { return build(FamilyKind::R, {n3, n4}); }

FamilyPolynomial poly_s(CliqueSize n4) { return build(FamilyKind::S, {n4}); }

FamilyPolynomial make_family_polynomial(FamilyKind kind, std::span<const CliqueSize> params) {
  if (static_cast<int>(params.size()) != parameter_count(kind)) {
    throw std::invalid_argument("family " + std::string(to_string(kind)) + " takes " +
                                std::to_string(parameter_count(kind)) + " parameters, got " +
                                std::to_string(params.size()));
  }
  return build(kind, {params.begin(), params.end()});
}

FamilyPolynomial family_polynomial(const CliqueJoinSpec& spec) {
  const auto s = spec.sizes();
  switch (spec.parts()) {
    case 2:
      return poly_f(s[0], s[1]);
    case 3:
      return poly_g(s[0], s[1], s[2]);
    default:
      return poly_h(s[0], s[1], s[2], s[3]);
  }
}

Rational eval_at(const FamilyPolynomial& p, const Rational& t) { return p.poly.evaluate(t); }

CliqueSize cofactor_exponent(const CliqueJoinSpec& spec) { return spec.order() - spec.parts() - 1; }

bool factorization_identity_check(const CliqueJoinSpec& spec) {
  const IntPolynomial actual = char_poly_exact(distance_matrix(build_graph(spec)));
  const IntPolynomial cofactor =
      IntPolynomial::linear_factor(-1).pow(static_cast<unsigned>(cofactor_exponent(spec)));
  return actual == cofactor * family_polynomial(spec).poly;
}

SymmetricBilinear r_bilinear_form(const Rational& t) {
  // r(t) is affine in each of n3, n4 separately and symmetric in them.
  auto at = [&](long n3, long n4) {
    const std::vector<BigInt> params{BigInt(n3), BigInt(n4)};
    return family_coefficients(FamilyKind::R, params).evaluate(t);
  };
  const Rational c = at(0, 0);
  const Rational b = at(1, 0) - c;
  const Rational a = at(1, 1) - 2 * b - c;
  return {a, b, c};
}

Rational r_n4_coefficient(CliqueSize n3, const Rational& t) {
  const auto form = r_bilinear_form(t);
  return form.n3n4 * static_cast<long>(n3) + form.linear;
}

std::optional<Rational> r_n4_bound(CliqueSize n3, const Rational& t) {
  const auto form = r_bilinear_form(t);
  const Rational slope = form.n3n4 * static_cast<long>(n3) + form.linear;
  if (sgn(slope) <= 0) return std::nullopt;
  Rational bound = -(form.linear * static_cast<long>(n3) + form.constant) / slope;
  bound.canonicalize();
  return bound;
}

}  // namespace distspec
