#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/polynomial.hpp"
#include "distspec/rational.hpp"

namespace distspec {

using CliqueSize = std::int64_t;

/// Parameters (n_1 <= ... <= n_r), 2 <= r <= 4, of the apex-over-cliques graph
/// K_1 v (K_{n_1} u ... u K_{n_r}). Sizes are sorted on construction.
class CliqueJoinSpec {
 public:
  /// Throws std::invalid_argument for fewer than 2 or more than 4 parts, or a
  /// size below 1.
  explicit CliqueJoinSpec(std::vector<CliqueSize> sizes);

  std::span<const CliqueSize> sizes() const { return sizes_; }
  int parts() const { return static_cast<int>(sizes_.size()); }
  /// 1 + sum of sizes.
  CliqueSize order() const;

  bool operator==(const CliqueJoinSpec&) const = default;

 private:
  std::vector<CliqueSize> sizes_;
};

/// Explicit graph with the apex at vertex 0 followed by the cliques in order.
/// Throws std::invalid_argument if the order exceeds kMaxOrder.
Graph build_graph(const CliqueJoinSpec& spec);

enum class FamilyKind { F, G4, H, R, S };

std::string_view to_string(FamilyKind kind);
/// "f", "g", "h", "r", "s" (case-insensitive).
FamilyKind parse_family_kind(std::string_view name);
/// Number of size parameters each family takes.
int parameter_count(FamilyKind kind);

struct FamilyPolynomial {
  FamilyKind kind;
  std::vector<CliqueSize> parameters;
  IntPolynomial poly;
};

/// Coefficient formulas evaluated for arbitrary integer parameters (zero and
/// negative values included). Parameter order is as for the poly_* builders.
IntPolynomial family_coefficients(FamilyKind kind, std::span<const BigInt> params);

// Closed-form factors of det(xI - D) for the apex-over-cliques families:
//   f: two cliques (cubic), g: three cliques (quartic), h: four cliques
//   (quintic), r: h / (x + 2) when n_1 = n_2 = 1, s: h / (x + 3) for sizes
//   (1, 2, 2, n_4). All sizes must be >= 1.
FamilyPolynomial poly_f(CliqueSize n1, CliqueSize n2);
FamilyPolynomial poly_g(CliqueSize n1, CliqueSize n2, CliqueSize n3);
FamilyPolynomial poly_h(CliqueSize n1, CliqueSize n2, CliqueSize n3, CliqueSize n4);
FamilyPolynomial poly_r(CliqueSize n3, CliqueSize n4);
FamilyPolynomial poly_s(CliqueSize n4);

/// Dispatches to poly_* with the given parameters; throws on a wrong count.
FamilyPolynomial make_family_polynomial(FamilyKind kind, std::span<const CliqueSize> params);

/// f, g or h according to the number of parts.
FamilyPolynomial family_polynomial(const CliqueJoinSpec& spec);

Rational eval_at(const FamilyPolynomial& p, const Rational& t);

/// Power of (x + 1) cofactor: order - parts - 1.
CliqueSize cofactor_exponent(const CliqueJoinSpec& spec);

/// char_poly_exact(build_graph(spec)) == (x + 1)^(n - r - 1) * family poly.
bool factorization_identity_check(const CliqueJoinSpec& spec);

/// r(t) written as a * n3 * n4 + b * (n3 + n4) + c.
struct SymmetricBilinear {
  Rational n3n4;
  Rational linear;
  Rational constant;
};
SymmetricBilinear r_bilinear_form(const Rational& t);

/// Coefficient of n4 in r(t) for fixed n3, i.e. a * n3 + b.
Rational r_n4_coefficient(CliqueSize n3, const Rational& t);

/// For fixed n3 with a positive n4-coefficient, r(t) < 0 exactly when
/// n4 < returned bound. Empty when the coefficient is nonpositive.
std::optional<Rational> r_n4_bound(CliqueSize n3, const Rational& t);

}  // namespace distspec
