// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "distspec/canonical.hpp"
#include "distspec/census.hpp"
#include "distspec/classifier.hpp"
#include "distspec/family.hpp"
#include "distspec/spectra.hpp"
#include "oracles.hpp"

using namespace distspec;

namespace {

const Rational kT = lambda2_threshold();
const Rational kWidth = make_rational(1, 1000000000);

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. Every table row within half a unit of its last printed digit.
Outcome tables() {
  const auto rows = reproduce_tables();
  int ok = 0;
  std::string bad;
  for (const auto& r : rows) {
    if (r.check.matches && r.enclosure.width() <= kWidth) {
      ++ok;
    } else {
      bad += " T" + std::to_string(r.table) + "/n4=" + std::to_string(r.spec.sizes().back());
    }
  }
  return {ok == static_cast<int>(rows.size()) && rows.size() == 24,
          std::to_string(ok) + "/" + std::to_string(rows.size()) + " rows match" + bad};
}

// 2. Reference anchors at printed precision; closed forms within 1e-9 and exactly enclosed.
Outcome anchors() {
  const auto all = anchor_eigenvalues();
  int reference = 0, reference_ok = 0, closed = 0, closed_ok = 0;
  for (const auto& a : all) {
    const bool is_anchor = a.description.find("K1 v") != std::string::npos;
    if (is_anchor) {
      ++reference;
      reference_ok += a.matches ? 1 : 0;
    }
    if (a.closed_form) {
      ++closed;
      const bool near = std::abs(a.closed_form->approx() - a.enclosure.approx()) <= 1e-9;
      closed_ok += (a.matches && near) ? 1 : 0;
    }
  }
  std::ostringstream d;
  d << reference_ok << "/" << reference << " anchors, " << closed_ok << "/" << closed << " closed forms";
  return {reference == 15 && reference_ok == reference && closed_ok == closed, d.str()};
}

// 3. Exact boundary signs and structural flip points.
Outcome boundaries() {
  bool ok = true;
  std::string why;
  auto expect = [&](bool c, const std::string& what) {
    if (!c) {
      ok = false;
      why += " " + what;
    }
  };
  expect(sgn(eval_at(poly_h(1, 2, 3, 870), kT)) < 0, "h(1,2,3,870)");
  expect(sgn(eval_at(poly_h(1, 2, 3, 871), kT)) > 0, "h(1,2,3,871)");
  expect(sgn(r_n4_coefficient(873, kT)) < 0, "r coefficient at 873");
  expect(sgn(r_n4_coefficient(874, kT)) > 0, "r coefficient at 874");
  struct Flip {
    std::vector<CliqueSize> base;
    CliqueSize last;
  };
  const std::vector<Flip> flips{{{1, 2, 4}, 14}, {{1, 2, 5}, 8}, {{1, 2, 6}, 6},
                                {{1, 3, 3}, 7},  {{1, 3, 4}, 4}, {{2, 2, 2}, 5}};
  for (const auto& f : flips) {
    auto with = [&](CliqueSize n4) {
      auto s = f.base;
      s.push_back(n4);
      return theorem_condition(s).holds;
    };
    bool flip_ok = with(f.last) && !with(f.last + 1);
    for (CliqueSize n4 = f.base.back(); n4 <= f.last; ++n4) flip_ok = flip_ok && with(n4);
    for (CliqueSize n4 = f.last + 1; n4 <= f.last + 50; ++n4) flip_ok = flip_ok && !with(n4);
    // Spectral cross-check on both sides of the flip.
    auto side = [&](CliqueSize n4) {
      auto s = f.base;
      s.push_back(n4);
      return compare_lambda2_threshold(build_graph(CliqueJoinSpec(s)));
    };
    flip_ok = flip_ok && side(f.last) == ThresholdSide::Below && side(f.last + 1) == ThresholdSide::Above;
    expect(flip_ok, "flip " + std::to_string(f.last) + "->" + std::to_string(f.last + 1));
  }
  return {ok, ok ? "h signs, r coefficients and 6 flips certified" : "failed:" + why};
}

// 4. Exhaustive equivalence through order 7.
Outcome census() {
  const auto start = std::chrono::steady_clock::now();
  const CensusReport report = verify_theorem(7);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::vector<int> expected{1, 2, 3, 5, 6, 9};
  bool counts = true;
  int failures = 0;
  for (const auto& r : report.per_order) {
    failures += static_cast<int>(r.agreement_failures.size());
    if (r.order < 2) continue;
    long oracle_count = 1;
    for (int k = 2; k <= 4; ++k) oracle_count += oracle::partitions(r.order - 1, k);
    counts = counts && r.in_family_count == expected[r.order - 2] && r.in_family_count == oracle_count;
  }
  std::ostringstream d;
  d << report.total_connected() << " classes, " << failures << " disagreements, in-family counts "
    << (counts ? "match" : "differ") << ", " << seconds << " s";
  return {report.total_connected() == 996 && failures == 0 && counts && seconds < 300, d.str()};
}

// 5. Factorization identities.
Outcome factorizations() {
  int specs = 0, ok = 0;
  const int budget = 39;
  auto check = [&](std::vector<CliqueSize> s) {
    ++specs;
    ok += factorization_identity_check(CliqueJoinSpec(std::move(s))) ? 1 : 0;
  };
  for (CliqueSize a = 1; a <= budget; ++a)
    for (CliqueSize b = a; a + b <= budget; ++b) {
      check({a, b});
      for (CliqueSize c = b; a + b + c <= budget; ++c) {
        check({a, b, c});
        for (CliqueSize d = c; a + b + c + d <= budget; ++d) check({a, b, c, d});
      }
    }
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<CliqueSize> size(1, 1000000);
  int tuples_ok = 0;
  for (int i = 0; i < 50; ++i) {
    const CliqueSize n3 = size(rng), n4 = size(rng);
    const bool r = poly_h(1, 1, n3, n4).poly == IntPolynomial{2, 1} * poly_r(n3, n4).poly;
    const bool s = poly_h(1, 2, 2, n4).poly == IntPolynomial{3, 1} * poly_s(n4).poly;
    tuples_ok += (r && s) ? 1 : 0;
  }
  std::ostringstream d;
  d << ok << "/" << specs << " specs (order <= 40), " << tuples_ok << "/50 h = (x+2)r, (x+3)s tuples";
  return {ok == specs && tuples_ok == 50, d.str()};
}

// 6. Sturm, inertia and Jacobi counts above the threshold.
Outcome dual_oracle() {
  int graphs = 0, exact_ok = 0, float_ok = 0;
  const double t = kT.get_d();
  for (const Graph& g : oracle::census(7)) {
    ++graphs;
    const auto d = distance_matrix(g);
    const int sturm = sturm_count_greater(char_poly_exact(d), kT);
    exact_ok += sturm == inertia_shifted(d, kT).positive ? 1 : 0;
    int clear = 0, near = 0;
    for (double v : float_spectrum(d)) {
      if (std::abs(v - t) <= 1e-8) {
        ++near;
      } else if (v > t) {
        ++clear;
      }
    }
    float_ok += (clear <= sturm && sturm <= clear + near) ? 1 : 0;
  }
  std::ostringstream d;
  d << "exact " << exact_ok << "/" << graphs << ", floating " << float_ok << "/" << graphs;
  return {exact_ok == graphs && float_ok == graphs, d.str()};
}

// 7. Interlacing on the n <= 6 census and the isometric-subgraph fixtures.
Outcome interlacing() {
  long subsets = 0, ok = 0;
  for (const Graph& g : oracle::census(6)) {
    const int n = g.order();
    const auto d = distance_matrix(g);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.push_back(v);
      ++subsets;
      ok += interlacing_check(d, s) ? 1 : 0;
    }
  }

  struct Fixture {
    std::string name;
    Graph h;
    Graph g;
  };
  const Graph k1 = complete(1);
  const std::vector<Fixture> fixtures{
      {"S4 in K1 v (K1 u 3K2)", star(4), build_graph(CliqueJoinSpec({1, 2, 2, 2}))},
      {"S4 in K1 v (K2 u K3 u K4)", star(4), build_graph(CliqueJoinSpec({2, 3, 4}))},
      {"S5 in K1 v (K1 u K2 u K4 u K14)", star(5), build_graph(CliqueJoinSpec({1, 2, 4, 14}))},
      {"S6 in K1 v (2K1 u 2K2 u K3)", star(6),
       join(k1, disjoint_union(scalar_union(2, complete(1)),
                               disjoint_union(scalar_union(2, complete(2)), complete(3))))},
      {"K4-e in K2 v (K1 u K2)", delete_edge(complete(4), 0, 1),
       join(complete(2), disjoint_union(complete(1), complete(2)))},
      {"C4 in K3,3", cycle(4), join(empty_graph(3), empty_graph(3))},
      {"K1 v P4 in K1 v C5", join(k1, path(4)), join(k1, cycle(5))},
      {"P4 in P6", path(4), path(6)},
      {"K1 v (3K1 u K2) in K1 v (K1 u 3K2)", join(k1, disjoint_union(empty_graph(3), complete(2))),
       build_graph(CliqueJoinSpec({1, 2, 2, 2}))},
  };
  int fixtures_ok = 0;
  std::string bad;
  for (const auto& f : fixtures) {
    const auto s = oracle::find_isometric_copy(f.g, f.h);
    bool good = s.has_value() && is_isometric_induced(f.g, *s);
    if (good) {
      const CertifiedSpectrum sg(distance_matrix(f.g));
      const CertifiedSpectrum sh(distance_matrix(f.h));
      good = sg.compare(2, sh, 2) != std::strong_ordering::less &&
             sg.compare(f.g.order(), sh, f.h.order()) != std::strong_ordering::greater &&
             interlacing_check(distance_matrix(f.g), *s);
    }
    if (good) {
      ++fixtures_ok;
    } else {
      bad += "; " + f.name;
    }
  }
  std::ostringstream d;
  d << ok << "/" << subsets << " subsets interlace, " << fixtures_ok << "/" << fixtures.size() << " fixtures" << bad;
  return {ok == subsets && fixtures_ok == static_cast<int>(fixtures.size()), d.str()};
}

// 8. Graphs with connected complements contain an induced P4.
Outcome lemma_com() {
  int eligible = 0, found = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_connected(complement(g))) continue;
      ++eligible;
      const auto p = find_induced_p4(g);
      if (!p) continue;
      const auto [a, b, c, d] = *p;
      const bool is_path = g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
                           !g.adjacent(a, d) && !g.adjacent(b, d);
      found += is_path ? 1 : 0;
    }
  }
  std::ostringstream d;
  d << found << "/" << eligible << " graphs with connected complement have an induced P4";
  return {eligible > 0 && found == eligible, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", tables},
      {"anchor reproduction", anchors},
      {"boundary certification", boundaries},
      {"theorem verification n <= 7", census},
      {"factorization identities", factorizations},
      {"dual-oracle agreement", dual_oracle},
      {"interlacing and isometric subgraphs", interlacing},
      {"induced P4 in co-connected graphs", lemma_com},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::defaultfloat << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
