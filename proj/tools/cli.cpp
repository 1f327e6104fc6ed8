#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "distspec/census.hpp"
#include "distspec/classifier.hpp"
#include "distspec/family.hpp"
#include "distspec/graph6.hpp"
#include "distspec/spectra.hpp"

namespace distspec::cli {

namespace {

using Json = nlohmann::ordered_json;

struct GraphInput {
  std::string g6;
  std::string clique_join;
  std::string named;

  void attach(CLI::App& cmd) {
    cmd.add_option("--g6", g6, "graph6-encoded graph");
    cmd.add_option("--clique-join", clique_join, "apex-over-cliques sizes, e.g. 1,2,4,14");
    cmd.add_option("--named", named, "named graph: Kn, Pn, Cn or Sn");
  }

  Graph resolve() const {
    const int given = !g6.empty() + !clique_join.empty() + !named.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --g6, --clique-join, --named");
    if (!g6.empty()) return parse_graph6(g6);
    if (!named.empty()) return parse_named(named);
    const auto sizes = parse_int_list(clique_join);
    return build_graph(CliqueJoinSpec({sizes.begin(), sizes.end()}));
  }
};

Json interval_json(const Interval& iv, int digits) {
  return Json{{"lo", to_string(iv.lo)},
              {"hi", to_string(iv.hi)},
              {"value", to_decimal(iv.midpoint(), digits)},
              {"width", to_decimal(iv.width(), 12)}};
}

Json graph_json(const Graph& g) {
  Json j{{"order", g.order()}, {"edges", g.edge_count()}};
  if (g.order() <= kMaxGraph6Order) j["graph6"] = emit_graph6(g);
  return j;
}

Json poly_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return coeffs;
}

Json verdict_json(const Verdict& v, int digits) {
  return Json{{"structural", v.structural},
              {"spectral", std::string(to_string(v.spectral))},
              {"agree", v.agree},
              {"condition", v.condition},
              {"form", describe(v.form)},
              {"lambda2_enclosure", interval_json(v.lambda2_enclosure, digits)}};
}

Json precision_json(const PrecisionCheck& c) {
  return Json{{"matches", c.matches}, {"rendered", c.rendered}, {"near_rounding_boundary", c.near_rounding_boundary}};
}

std::string sizes_text(std::span<const CliqueSize> sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out;
}

}  // namespace

Graph parse_named(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("named graph must look like K5, P4, C6 or S5");
  int n = 0;
  const auto digits = name.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("bad size in named graph '" + std::string(name) + "'");
  }
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'K':
      return complete(n);
    case 'P':
      return path(n);
    case 'C':
      return cycle(n);
    case 'S':
      return star(n);
  }
  throw std::invalid_argument("unknown graph family in '" + std::string(name) + "'");
}

std::vector<long long> parse_int_list(std::string_view text) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("bad integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified distance spectra and second-eigenvalue classification", "distspec"};
  app.require_subcommand(1);

  int digits = 10;
  std::string width_text = "1/1000000000000";
  app.add_option("--digits", digits, "decimals used when rendering eigenvalues")->check(CLI::Range(0, 60));

  GraphInput spectrum_in;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "characteristic polynomial and certified spectrum");
  spectrum_in.attach(*spectrum_cmd);
  spectrum_cmd->add_option("--width", width_text, "enclosure width (p/q or decimal)");

  GraphInput lambda_in;
  int lambda_k = 2;
  auto* lambda_cmd = app.add_subcommand("lambda", "certified enclosure of the k-th distance eigenvalue");
  lambda_cmd->add_option("k", lambda_k, "eigenvalue index (1 = largest)")->required();
  lambda_in.attach(*lambda_cmd);
  lambda_cmd->add_option("--width", width_text, "enclosure width (p/q or decimal)");

  GraphInput classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "structural vs certified spectral verdict");
  classify_in.attach(*classify_cmd);

  int max_n = 0;
  int workers = 1;
  bool allow_8 = false;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check over all small connected graphs");
  verify_cmd->add_option("--max-n", max_n, "largest order to enumerate")->required();
  verify_cmd->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--allow-8", allow_8, "permit order 8 (slow)");
  verify_cmd->add_flag("--timing", timing, "include elapsed time in the report");

  bool csv = false;
  auto* tables_cmd = app.add_subcommand("tables", "reproduce the four reference lambda_2 tables");
  tables_cmd->add_flag("--csv", csv, "CSV instead of JSON");

  auto* anchors_cmd = app.add_subcommand("anchors", "scattered eigenvalue constants");

  std::string family_name;
  std::string params_text;
  std::string eval_text;
  bool n4_bound = false;
  auto* poly_cmd = app.add_subcommand("poly", "closed-form family polynomials");
  poly_cmd->add_option("--family", family_name, "f, g, h, r or s")->required();
  poly_cmd->add_option("--params", params_text, "comma-separated sizes")->required();
  poly_cmd->add_option("--eval", eval_text, "exact evaluation point (p/q or decimal)");
  poly_cmd->add_flag("--n4-bound", n4_bound, "for r: exact n4 threshold for the given n3 at the evaluation point");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum_cmd->parsed()) {
      const Graph g = spectrum_in.resolve();
      const Rational width = parse_rational(width_text);
      if (sgn(width) <= 0) throw std::invalid_argument("width must be positive");
      const DistanceMatrix d = distance_matrix(g);
      const CertifiedSpectrum spectrum(d);
      Json eig = Json::array();
      for (int k = 1; k <= g.order(); ++k) eig.push_back(interval_json(spectrum.enclosure(k, width), digits));
      Json floats = Json::array();
      for (double v : float_spectrum(d)) floats.push_back(v);
      Json j{{"graph", graph_json(g)},
             {"char_poly", poly_json(spectrum.char_poly())},
             {"char_poly_text", spectrum.char_poly().to_string("x")},
             {"width", to_string(width)},
             {"eigenvalues", eig},
             {"float_spectrum", floats}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (lambda_cmd->parsed()) {
      const Graph g = lambda_in.resolve();
      const Rational width = parse_rational(width_text);
      const Interval iv = lambda_k_enclosure(g, lambda_k, width);
      Json j{{"graph", graph_json(g)}, {"k", lambda_k}, {"enclosure", interval_json(iv, digits)}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (classify_cmd->parsed()) {
      const Graph g = classify_in.resolve();
      const Verdict v = classify(g);
      Json j = verdict_json(v, digits);
      j["graph"] = graph_json(g);
      out << j.dump(2) << "\n";
      return v.agree ? kExitOk : kExitDisagreement;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.workers = workers;
      options.cap = allow_8 ? kHardEnumerationCap : kDefaultEnumerationCap;
      const CensusReport report = verify_theorem(max_n, options);
      Json per_order = Json::array();
      for (const auto& r : report.per_order) {
        per_order.push_back(Json{{"order", r.order},
                                 {"connected_count", r.connected_count},
                                 {"in_family_count", r.in_family_count},
                                 {"below", r.below_count},
                                 {"at_threshold", r.at_threshold_count},
                                 {"above", r.above_count},
                                 {"agreement_failures", r.agreement_failures}});
      }
      Json j{{"max_order", report.max_order},
             {"total_connected", report.total_connected()},
             {"verified", report.verified()},
             {"per_order", per_order}};
      if (timing) {
        j["workers"] = report.workers;
        j["elapsed_seconds"] = report.elapsed.count();
      }
      out << j.dump(2) << "\n";
      return report.verified() ? kExitOk : kExitDisagreement;
    }

    if (tables_cmd->parsed()) {
      const auto rows = reproduce_tables();
      bool all = true;
      if (csv) {
        out << "table,sizes,n4,reference,computed,lo,hi,matches,near_rounding_boundary\n";
        for (const auto& r : rows) {
          out << r.table << ",\"" << sizes_text(r.spec.sizes()) << "\"," << r.spec.sizes().back() << ","
              << r.reference.text << "," << to_decimal(r.enclosure.midpoint(), digits) << ","
              << to_decimal(r.enclosure.lo, 15) << "," << to_decimal(r.enclosure.hi, 15) << ","
              << (r.check.matches ? "true" : "false") << "," << (r.check.near_rounding_boundary ? "true" : "false")
              << "\n";
          all = all && r.check.matches;
        }
      } else {
        Json arr = Json::array();
        for (const auto& r : rows) {
          arr.push_back(Json{{"table", r.table},
                             {"sizes", sizes_text(r.spec.sizes())},
                             {"reference", r.reference.text},
                             {"lambda2", interval_json(r.enclosure, digits)},
                             {"check", precision_json(r.check)}});
          all = all && r.check.matches;
        }
        out << Json{{"rows", arr}, {"all_match", all}}.dump(2) << "\n";
      }
      return all ? kExitOk : kExitDisagreement;
    }

    if (anchors_cmd->parsed()) {
      const auto anchors = anchor_eigenvalues();
      bool all = true;
      Json arr = Json::array();
      for (const auto& a : anchors) {
        Json item{{"description", a.description}, {"graph6", a.graph6}, {"k", a.k},
                  {"enclosure", interval_json(a.enclosure, digits)}};
        if (a.reference) item["reference"] = a.reference->text;
        if (a.check) item["check"] = precision_json(*a.check);
        if (a.closed_form) item["closed_form"] = a.closed_form->text;
        item["matches"] = a.matches;
        arr.push_back(std::move(item));
        all = all && a.matches;
      }
      out << Json{{"anchors", arr}, {"all_match", all}}.dump(2) << "\n";
      return all ? kExitOk : kExitDisagreement;
    }

    if (poly_cmd->parsed()) {
      const FamilyKind kind = parse_family_kind(family_name);
      const auto raw = parse_int_list(params_text);
      const std::vector<CliqueSize> params(raw.begin(), raw.end());
      const FamilyPolynomial p = make_family_polynomial(kind, params);
      Json j{{"family", std::string(to_string(kind))},
             {"params", params},
             {"coefficients", poly_json(p.poly)},
             {"text", p.poly.to_string("x")}};
      if (!eval_text.empty() || n4_bound) {
        const Rational t = eval_text.empty() ? lambda2_threshold() : parse_rational(eval_text);
        j["at"] = to_string(t);
        if (!eval_text.empty()) {
          const Rational value = eval_at(p, t);
          j["value"] = to_string(value);
          j["sign"] = sgn(value);
          j["value_decimal"] = to_decimal(value, digits);
        }
        if (n4_bound) {
          if (kind != FamilyKind::R) throw std::invalid_argument("--n4-bound applies to family r only");
          const auto form = r_bilinear_form(t);
          j["bilinear_form"] = Json{{"n3n4", to_string(form.n3n4)},
                                    {"n3_plus_n4", to_string(form.linear)},
                                    {"constant", to_string(form.constant)}};
          j["n4_coefficient"] = to_string(r_n4_coefficient(params[0], t));
          const auto bound = r_n4_bound(params[0], t);
          j["n4_bound"] = bound ? Json(to_string(*bound)) : Json(nullptr);
        }
      }
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace distspec::cli
