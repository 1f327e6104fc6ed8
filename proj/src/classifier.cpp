#include "distspec/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace distspec {

namespace {

void require_theorem_scope(const Graph& g) {
  if (g.order() < 2) throw std::domain_error("classification needs a graph with at least two vertices");
  if (!is_connected(g)) throw std::domain_error("classification needs a connected graph");
}

}  // namespace

StructuralForm recognize_structure(const Graph& g) {
  require_theorem_scope(g);
  const int n = g.order();
  if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return CompleteForm{n};

  // Several universal vertices in a non-complete graph leave a connected
  // remainder, so at most one candidate can succeed; try them all anyway.
  for (Vertex apex : universal_vertices(g)) {
    VertexSet rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != apex) rest.push_back(v);
    }
    const auto cliques = is_union_of_cliques(induced_subgraph(g, rest));
    if (cliques && cliques->size() >= 2 && cliques->size() <= 4) {
      return ApexCliquesForm{{cliques->begin(), cliques->end()}};
    }
  }
  return OtherForm{};
}

TheoremCondition theorem_condition(std::span<const CliqueSize> sizes) {
  if (sizes.size() < 2 || sizes.size() > 4) {
    throw std::invalid_argument("theorem condition needs 2 to 4 clique sizes");
  }
  std::vector<CliqueSize> s(sizes.begin(), sizes.end());
  std::sort(s.begin(), s.end());
  if (s.front() < 1) throw std::invalid_argument("clique sizes must be at least 1");
  if (s.size() == 2) return {true, "two cliques"};
  if (s.size() == 3) return {true, "three cliques"};

  const CliqueSize n1 = s[0], n2 = s[1], n3 = s[2], n4 = s[3];
  if (n1 == 1 && n2 == 1) {
    if (n3 <= 873) return {true, "(i)"};
    if (sgn(eval_at(poly_r(n3, n4), lambda2_threshold())) < 0) return {true, "(ii)"};
    return {false, "none"};
  }
  if (n1 == 1 && n2 == 2) {
    const bool holds = n3 == 2 || (n3 == 3 && n4 <= 870) || (n3 == 4 && n4 <= 14) ||
                       (n3 == 5 && n4 <= 8) || (n3 == 6 && n4 == 6);
    return {holds, holds ? "(iii)" : "none"};
  }
  if (n1 == 1 && n2 == 3) {
    const bool holds = (n3 == 3 && n4 <= 7) || (n3 == 4 && n4 == 4);
    return {holds, holds ? "(iv)" : "none"};
  }
  if (n1 == 2 && n2 == 2 && n3 == 2 && n4 <= 5) return {true, "(v)"};
  return {false, "none"};
}

namespace {

TheoremCondition structural_decision(const StructuralForm& form) {
  if (std::holds_alternative<CompleteForm>(form)) return {true, "complete"};
  if (const auto* apex = std::get_if<ApexCliquesForm>(&form)) return theorem_condition(apex->sizes);
  return {false, "none"};
}

}  // namespace

bool classify_structural(const Graph& g) { return structural_decision(recognize_structure(g)).holds; }

Verdict classify(const Graph& g, const Rational& enclosure_width) {
  StructuralForm form = recognize_structure(g);
  const TheoremCondition decision = structural_decision(form);
  const CertifiedSpectrum spectrum(distance_matrix(g));
  const ThresholdSide side = compare_lambda2(spectrum.counter(), lambda2_threshold());
  const bool agree = decision.holds == (side == ThresholdSide::Below);
  return Verdict{decision.holds, side,  agree, decision.label,
                 std::move(form),  spectrum.enclosure(2, enclosure_width)};
}

std::string describe(const StructuralForm& form) {
  if (const auto* c = std::get_if<CompleteForm>(&form)) return "K" + std::to_string(c->order);
  if (const auto* a = std::get_if<ApexCliquesForm>(&form)) {
    std::string out = "K1 v (";
    for (std::size_t i = 0; i < a->sizes.size(); ++i) {
      if (i > 0) out += " u ";
      out += "K" + std::to_string(a->sizes[i]);
    }
    return out + ")";
  }
  return "other";
}

}  // namespace distspec
