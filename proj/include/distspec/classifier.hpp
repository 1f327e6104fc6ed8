#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "distspec/family.hpp"
#include "distspec/graph.hpp"
#include "distspec/rational.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

struct CompleteForm {
  int order;
  bool operator==(const CompleteForm&) const = default;
};

struct ApexCliquesForm {
  std::vector<CliqueSize> sizes;  // sorted, 2 to 4 entries
  bool operator==(const ApexCliquesForm&) const = default;
};

struct OtherForm {
  bool operator==(const OtherForm&) const = default;
};

using StructuralForm = std::variant<CompleteForm, ApexCliquesForm, OtherForm>;

/// K_n, K_1 v (K_{n_1} u ... u K_{n_r}) with 2 <= r <= 4, or neither.
/// Requires a connected graph with at least two vertices (std::domain_error).
StructuralForm recognize_structure(const Graph& g);

struct TheoremCondition {
  bool holds;
  /// "two cliques", "three cliques", "(i)".."(v)", or "none".
  std::string label;
};

/// Whether lambda_2 of K_1 v (K_{n_1} u ... u K_{n_r}) lies below -0.5858, as
/// decided by the closed-form conditions: always for r = 2, 3; for r = 4 one of
/// items (i)-(v), where (ii) is the exact sign of r at the threshold. Sizes are
/// taken sorted; throws std::invalid_argument for a bad length or a size < 1.
TheoremCondition theorem_condition(std::span<const CliqueSize> sizes);

/// True iff g is K_n (n >= 2) or an apex-over-cliques graph satisfying
/// theorem_condition.
bool classify_structural(const Graph& g);

struct Verdict {
  bool structural;
  ThresholdSide spectral;
  bool agree;
  /// Theorem item that fired ("complete", "(iii)", ...) or "none".
  std::string condition;
  StructuralForm form;
  Interval lambda2_enclosure;
};

/// Runs the structural decision and the certified spectral decision side by
/// side. Throws std::domain_error for order < 2 or a disconnected graph.
Verdict classify(const Graph& g, const Rational& enclosure_width = make_rational(1, 1000000000));

std::string describe(const StructuralForm& form);

}  // namespace distspec
