#include <doctest.h>

#include <random>
#include <stdexcept>

#include "distspec/canonical.hpp"
#include "distspec/classifier.hpp"
#include "oracles.hpp"

using namespace distspec;

namespace {

TheoremCondition cond(std::vector<CliqueSize> sizes) { return theorem_condition(sizes); }

bool structural(std::vector<CliqueSize> sizes) { return classify_structural(build_graph(CliqueJoinSpec(sizes))); }

}  // namespace

TEST_CASE("structure recognition") {
  CHECK(recognize_structure(complete(7)) == StructuralForm{CompleteForm{7}});
  CHECK(recognize_structure(build_graph(CliqueJoinSpec({1, 2, 4, 14}))) ==
        StructuralForm{ApexCliquesForm{{1, 2, 4, 14}}});
  CHECK(recognize_structure(path(4)) == StructuralForm{OtherForm{}});
  CHECK(recognize_structure(path(3)) == StructuralForm{ApexCliquesForm{{1, 1}}});
  // Five cliques under an apex is outside the family.
  const Graph five = join(complete(1), scalar_union(5, complete(1)));
  CHECK(recognize_structure(five) == StructuralForm{OtherForm{}});
  // K4 - e has two universal vertices; removing either leaves P3.
  CHECK(recognize_structure(delete_edge(complete(4), 0, 1)) == StructuralForm{OtherForm{}});
  CHECK_THROWS_AS(recognize_structure(complete(1)), std::domain_error);
  CHECK_THROWS_AS(recognize_structure(empty_graph(3)), std::domain_error);
}

TEST_CASE("recognition round-trips every spec up to order 40 under relabeling") {
  std::mt19937_64 rng(23);
  for (int a = 1; a <= 39; ++a)
    for (int b = a; a + b <= 39; ++b)
      for (int c = b; a + b + c <= 39; c += 3)
        for (int d = c; a + b + c + d <= 39; d += 5) {
          const CliqueJoinSpec spec({a, b, c, d});
          const Graph g = build_graph(spec);
          const auto perm = oracle::random_permutation(g.order(), rng);
          const auto form = recognize_structure(relabel(g, perm));
          REQUIRE(std::holds_alternative<ApexCliquesForm>(form));
          CHECK(std::get<ApexCliquesForm>(form).sizes == std::vector<CliqueSize>{a, b, c, d});
        }
}

TEST_CASE("theorem conditions") {
  CHECK(cond({4, 9}).holds);
  CHECK(cond({4, 9}).label == "two cliques");
  CHECK(cond({3, 4, 9}).label == "three cliques");
  CHECK(cond({1, 1, 873, 1000000}).holds);
  CHECK(cond({1, 1, 873, 1000000}).label == "(i)");
  CHECK_FALSE(cond({1, 2, 3, 871}).holds);
  CHECK(cond({1, 2, 3, 870}).label == "(iii)");
  CHECK(cond({2, 2, 2, 5}).label == "(v)");
  CHECK_FALSE(cond({2, 2, 2, 6}).holds);
  CHECK(cond({1, 2, 2, 1000000}).label == "(iii)");
  CHECK(cond({1, 2, 6, 6}).label == "(iii)");
  CHECK_FALSE(cond({1, 2, 6, 7}).holds);
  CHECK(cond({1, 3, 4, 4}).label == "(iv)");
  CHECK_FALSE(cond({1, 3, 4, 5}).holds);
  CHECK_FALSE(cond({3, 3, 3, 3}).holds);
  CHECK_FALSE(cond({1, 4, 4, 4}).holds);
  CHECK(cond({14, 1, 4, 2}).label == "(iii)");  // unsorted input is sorted first
  CHECK_THROWS_AS(cond({1}), std::invalid_argument);
  CHECK_THROWS_AS(cond({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("condition (ii) follows the exact sign of r") {
  const Rational t = lambda2_threshold();
  CHECK(cond({1, 1, 874, 874}).label == "(ii)");
  CHECK(cond({1, 1, 874, 792625}).label == "(ii)");
  CHECK_FALSE(cond({1, 1, 874, 792626}).holds);
  CHECK_FALSE(cond({1, 1, 2000, 2000}).holds);
  for (long n3 : {874L, 875L, 900L, 2000L, 100000L}) {
    const auto bound = r_n4_bound(n3, t);
    REQUIRE(bound.has_value());
    const long near = static_cast<long>(bound->get_d());
    for (long n4 : {n3, n3 + 1, near - 1, near, near + 1, near + 2, 1000000000L}) {
      if (n4 < n3) continue;
      const bool negative = sgn(eval_at(poly_r(n3, n4), t)) < 0;
      const auto c = cond({1, 1, n3, n4});
      CHECK(c.holds == negative);
      CHECK(c.label == (negative ? "(ii)" : "none"));
    }
  }
}

TEST_CASE("classification examples") {
  const Verdict k2 = classify(complete(2));
  CHECK(k2.structural);
  CHECK(k2.spectral == ThresholdSide::Below);
  CHECK(k2.agree);
  CHECK(k2.condition == "complete");

  const Verdict out = classify(build_graph(CliqueJoinSpec({1, 2, 4, 15})));
  CHECK_FALSE(out.structural);
  CHECK(out.spectral == ThresholdSide::Above);
  CHECK(out.agree);
  CHECK(to_decimal(out.lambda2_enclosure.midpoint(), 5) == "-0.58577");

  const Verdict in = classify(build_graph(CliqueJoinSpec({1, 2, 4, 14})));
  CHECK(in.structural);
  CHECK(in.spectral == ThresholdSide::Below);
  CHECK(in.agree);
  CHECK(in.condition == "(iii)");
  CHECK(describe(in.form) == "K1 v (K1 u K2 u K4 u K14)");

  CHECK(describe(recognize_structure(complete(3))) == "K3");
  CHECK_THROWS_AS(classify(complete(1)), std::domain_error);
  CHECK_THROWS_AS(classify(empty_graph(2)), std::domain_error);
}

TEST_CASE("structural verdict boundaries") {
  auto last_true = [](std::vector<CliqueSize> base, CliqueSize from) {
    CliqueSize n4 = from;
    auto with = [&](CliqueSize x) {
      auto s = base;
      s.push_back(x);
      return s;
    };
    CHECK(structural(with(n4)));
    while (structural(with(n4 + 1))) ++n4;
    // Stays false for a while after the flip.
    for (CliqueSize x = n4 + 1; x <= n4 + 10; ++x) CHECK_FALSE(structural(with(x)));
    return n4;
  };
  CHECK(last_true({1, 2, 4}, 4) == 14);
  CHECK(last_true({1, 2, 5}, 5) == 8);
  CHECK(last_true({1, 2, 6}, 6) == 6);
  CHECK(last_true({1, 3, 3}, 3) == 7);
  CHECK(last_true({1, 3, 4}, 4) == 4);
  CHECK(last_true({2, 2, 2}, 2) == 5);
}

TEST_CASE("structural and spectral verdicts agree on every spec up to order 30") {
  for (int a = 1; a <= 29; ++a)
    for (int b = a; a + b <= 29; ++b) {
      REQUIRE(classify(build_graph(CliqueJoinSpec({a, b}))).agree);
      for (int c = b; a + b + c <= 29; ++c) {
        REQUIRE(classify(build_graph(CliqueJoinSpec({a, b, c}))).agree);
        for (int d = c; a + b + c + d <= 29; ++d) REQUIRE(classify(build_graph(CliqueJoinSpec({a, b, c, d}))).agree);
      }
    }
}

TEST_CASE("verdicts are invariant under relabeling") {
  std::mt19937_64 rng(29);
  const auto graphs = enumerate_connected(7);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph& g = graphs[pick(rng)];
    const Verdict a = classify(relabel(g, oracle::random_permutation(7, rng)));
    const Verdict b = classify(relabel(g, oracle::random_permutation(7, rng)));
    CHECK(a.structural == b.structural);
    CHECK(a.spectral == b.spectral);
    CHECK(a.condition == b.condition);
    CHECK(a.form == b.form);
  }
  const Graph big = build_graph(CliqueJoinSpec({1, 3, 3, 7}));
  const Verdict ref = classify(big);
  for (int trial = 0; trial < 5; ++trial) {
    const Verdict v = classify(relabel(big, oracle::random_permutation(big.order(), rng)));
    CHECK(v.structural == ref.structural);
    CHECK(v.spectral == ref.spectral);
  }
}
