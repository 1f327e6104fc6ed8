#include "distspec/census.hpp"

#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "distspec/graph6.hpp"

namespace distspec {

namespace {

const Rational kTableWidth = make_rational(1, 1000000000);

struct Outcome {
  bool structural = false;
  ThresholdSide spectral = ThresholdSide::Above;
  bool agree = true;
};

std::vector<Outcome> classify_all(const std::vector<Graph>& graphs, int workers) {
  std::vector<Outcome> outcomes(graphs.size());
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    try {
      for (std::size_t i = static_cast<std::size_t>(w); i < graphs.size(); i += static_cast<std::size_t>(workers)) {
        const Graph& g = graphs[i];
        const bool structural = classify_structural(g);
        const ThresholdSide spectral = compare_lambda2_threshold(g);
        outcomes[i] = {structural, spectral, structural == (spectral == ThresholdSide::Below)};
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return outcomes;
}

}  // namespace

int CensusReport::total_connected() const {
  return std::accumulate(per_order.begin(), per_order.end(), 0,
                         [](int acc, const OrderRecord& r) { return acc + r.connected_count; });
}

bool CensusReport::verified() const {
  for (const auto& r : per_order) {
    if (!r.agreement_failures.empty()) return false;
  }
  return true;
}

CensusReport verify_theorem(int max_n, const VerifyOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("worker count must be positive");
  if (max_n < 2 || max_n > options.cap) {
    throw std::invalid_argument("verification order must lie in 2.." + std::to_string(options.cap));
  }
  const auto start = std::chrono::steady_clock::now();
  CensusReport report{max_n, options.workers, {}, {}};
  report.per_order.push_back({1, 1, 0, 0, 0, 0, {}});
  for (int n = 2; n <= max_n; ++n) {
    const auto graphs = enumerate_connected(n, options.cap);
    const auto outcomes = classify_all(graphs, options.workers);
    OrderRecord record{n, static_cast<int>(graphs.size()), 0, 0, 0, 0, {}};
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& o = outcomes[i];
      if (o.structural) ++record.in_family_count;
      switch (o.spectral) {
        case ThresholdSide::Below:
          ++record.below_count;
          break;
        case ThresholdSide::AtThreshold:
          ++record.at_threshold_count;
          break;
        case ThresholdSide::Above:
          ++record.above_count;
          break;
      }
      if (!o.agree) record.agreement_failures.push_back(emit_graph6(graphs[i]));
    }
    report.per_order.push_back(std::move(record));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

PrintedValue printed(const std::string& text) {
  const auto dot = text.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  return {text, parse_rational(text), decimals};
}

PrecisionCheck check_printed(const Interval& enclosure, const PrintedValue& value) {
  const Rational unit = pow10(-value.decimals);
  const Rational half = unit / 2;
  const bool matches = abs(enclosure.lo - value.value) <= half && abs(enclosure.hi - value.value) <= half;
  const Rational mid = enclosure.midpoint();
  // Distance from the nearest rounding boundary (k + 1/2) * unit.
  const Rational scaled = abs(mid) / unit;
  BigInt whole;
  mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const Rational frac = scaled - Rational(whole);
  const bool near = abs(frac - Rational(1, 2)) < Rational(1, 20);
  return {matches, to_decimal(mid, value.decimals), near};
}

std::vector<TableRow> reproduce_tables() {
  struct Source {
    int table;
    std::vector<CliqueSize> base;
    CliqueSize first_n4;
    std::vector<std::string> values;
  };
  const std::vector<Source> sources{
      {1, {1, 2, 4}, 4,
       {"-0.5877", "-0.5872", "-0.5869", "-0.5866", "-0.5864", "-0.5863", "-0.5861", "-0.58604", "-0.58595",
        "-0.58588", "-0.58582"}},
      {2, {1, 2, 5}, 5, {"-0.5867", "-0.5864", "-0.5861", "-0.5859"}},
      {3, {1, 3, 3}, 3, {"-0.5878", "-0.5870", "-0.5865", "-0.5862", "-0.5859"}},
      {4, {2, 2, 2}, 2, {"-0.5887", "-0.5872", "-0.5864", "-0.5859"}},
  };
  std::vector<TableRow> rows;
  for (const auto& src : sources) {
    for (std::size_t i = 0; i < src.values.size(); ++i) {
      auto sizes = src.base;
      sizes.push_back(src.first_n4 + static_cast<CliqueSize>(i));
      CliqueJoinSpec spec(std::move(sizes));
      const PrintedValue reference = printed(src.values[i]);
      const Interval enc = lambda_k_enclosure(build_graph(spec), 2, kTableWidth);
      rows.push_back({src.table, std::move(spec), reference, enc, check_printed(enc, reference)});
    }
  }
  return rows;
}

double QuadraticSurd::approx() const { return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(radicand)); }

int QuadraticSurd::compare(const Rational& q) const {
  // sign(a + b sqrt(c) - q) = sign(b sqrt(c) - d) with d = q - a.
  const Rational d = q - a;
  const Rational lhs_sq = b * b * radicand;
  const Rational d_sq = d * d;
  if (sgn(b) >= 0) {
    if (sgn(d) < 0) return 1;
    return lhs_sq > d_sq ? 1 : (lhs_sq == d_sq ? 0 : -1);
  }
  // b < 0: b sqrt(c) is negative.
  if (sgn(d) >= 0) return -1;
  return lhs_sq < d_sq ? 1 : (lhs_sq == d_sq ? 0 : -1);
}

std::vector<Anchor> anchor_eigenvalues() {
  struct Source {
    std::string description;
    Graph graph;
    int k;
    std::optional<std::string> reference;
    std::optional<QuadraticSurd> closed_form;
  };
  auto apex = [](std::vector<CliqueSize> sizes) { return build_graph(CliqueJoinSpec(std::move(sizes))); };
  auto surd = [](long a_num, long a_den, long b_num, long b_den, long c, std::string text) {
    return QuadraticSurd{make_rational(a_num, a_den), make_rational(b_num, b_den), c, std::move(text)};
  };

  std::vector<Source> sources;
  sources.push_back({"lambda_2(K1 v 4K3)", apex({3, 3, 3, 3}), 2, "-0.5830", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u 3K4))", apex({1, 4, 4, 4}), 2, "-0.5855", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u 3K2))", apex({1, 2, 2, 2}), 2, "-0.5925", std::nullopt});
  sources.push_back({"lambda_6(K1 v (3K1 u K2))", apex({1, 1, 1, 2}), 6, "-2.6288", std::nullopt});
  sources.push_back({"lambda_9(K1 v (K1 u 2K2 u K3))", apex({1, 2, 2, 3}), 9, "-3.6122", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u K2 u K4 u K15))", apex({1, 2, 4, 15}), 2, "-0.58577", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u K2 u K5 u K9))", apex({1, 2, 5, 9}), 2, "-0.58576", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u K2 u K6 u K7))", apex({1, 2, 6, 7}), 2, "-0.58576", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u K2 u 2K6))", apex({1, 2, 6, 6}), 2, "-0.5860", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u 2K3 u K8))", apex({1, 3, 3, 8}), 2, "-0.58576", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u K3 u K4 u K5))", apex({1, 3, 4, 5}), 2, "-0.58575", std::nullopt});
  sources.push_back({"lambda_2(K1 v (K1 u K3 u 2K4))", apex({1, 3, 4, 4}), 2, "-0.5862", std::nullopt});
  sources.push_back({"lambda_2(K1 v (2K2 u 2K3))", apex({2, 2, 3, 3}), 2, std::nullopt,
                     surd(-2, 1, 1, 1, 2, "sqrt(2) - 2")});
  sources.push_back({"lambda_2(K1 v (3K2 u K6))", apex({2, 2, 2, 6}), 2, "-0.5856", std::nullopt});
  sources.push_back({"lambda_2(K1 v P4)", join(complete(1), path(4)), 2, "-0.3820", std::nullopt});

  sources.push_back({"lambda_2(P3)", path(3), 2, std::nullopt, surd(1, 1, -1, 1, 3, "1 - sqrt(3)")});
  sources.push_back({"lambda_2(P4)", path(4), 2, "-0.58579", surd(-2, 1, 1, 1, 2, "sqrt(2) - 2")});
  sources.push_back({"lambda_2(S4)", star(4), 2, std::nullopt, surd(2, 1, -1, 1, 7, "2 - sqrt(7)")});
  sources.push_back({"lambda_4(S4)", star(4), 4, std::nullopt, surd(-2, 1, 0, 1, 1, "-2")});
  sources.push_back({"lambda_2(S5)", star(5), 2, std::nullopt, surd(3, 1, -1, 1, 13, "3 - sqrt(13)")});
  sources.push_back({"lambda_2(S6)", star(6), 2, std::nullopt, surd(4, 1, -1, 1, 21, "4 - sqrt(21)")});
  sources.push_back({"lambda_2(K4 - e)", delete_edge(complete(4), 0, 1), 2, std::nullopt,
                     surd(3, 2, -1, 2, 17, "(3 - sqrt(17))/2")});
  sources.push_back({"lambda_2(C4)", cycle(4), 2, std::nullopt, surd(0, 1, 0, 1, 1, "0")});
  sources.push_back({"lambda_2(K5)", complete(5), 2, std::nullopt, surd(-1, 1, 0, 1, 1, "-1")});

  std::vector<Anchor> anchors;
  for (auto& src : sources) {
    Anchor a;
    a.description = src.description;
    a.graph6 = emit_graph6(src.graph);
    a.k = src.k;
    a.enclosure = lambda_k_enclosure(src.graph, src.k, kTableWidth);
    a.matches = true;
    if (src.reference) {
      a.reference = printed(*src.reference);
      a.check = check_printed(a.enclosure, *a.reference);
      a.matches = a.matches && a.check->matches;
    }
    if (src.closed_form) {
      const auto& cf = *src.closed_form;
      a.matches = a.matches && cf.compare(a.enclosure.lo) >= 0 && cf.compare(a.enclosure.hi) <= 0;
      a.closed_form = cf;
    }
    anchors.push_back(std::move(a));
  }
  return anchors;
}

}  // namespace distspec
