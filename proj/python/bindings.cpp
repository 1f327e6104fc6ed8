#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distspec/census.hpp"
#include "distspec/classifier.hpp"
#include "distspec/family.hpp"
#include "distspec/graph6.hpp"
#include "distspec/spectra.hpp"

namespace py = pybind11;
using namespace distspec;

namespace {

py::object to_py(const BigInt& n) { return py::module_::import("builtins").attr("int")(n.get_str()); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

Rational from_py(const py::object& value) {
  // Accepts int, fractions.Fraction or a "p/q" / decimal string.
  if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
  if (py::isinstance<py::int_>(value)) return Rational(BigInt(py::str(value).cast<std::string>(), 10));
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    return make_rational(BigInt(py::str(value.attr("numerator")).cast<std::string>(), 10),
                         BigInt(py::str(value.attr("denominator")).cast<std::string>(), 10));
  }
  throw py::type_error("expected int, Fraction or str");
}

py::tuple interval(const Interval& iv) { return py::make_tuple(to_py(iv.lo), to_py(iv.hi)); }

py::list poly_list(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

py::dict census_dict(const CensusReport& r) {
  py::list rows;
  for (const auto& o : r.per_order) {
    py::dict d;
    d["order"] = o.order;
    d["connected_count"] = o.connected_count;
    d["in_family_count"] = o.in_family_count;
    d["below"] = o.below_count;
    d["at_threshold"] = o.at_threshold_count;
    d["above"] = o.above_count;
    d["agreement_failures"] = o.agreement_failures;
    rows.append(d);
  }
  py::dict d;
  d["max_order"] = r.max_order;
  d["total_connected"] = r.total_connected();
  d["verified"] = r.verified();
  d["per_order"] = rows;
  d["elapsed_seconds"] = r.elapsed.count();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified distance spectra and second-eigenvalue classification";

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges",
                  [](int order, const std::vector<Edge>& edges) { return Graph::from_edges(order, edges); })
      .def_property_readonly("order", &Graph::order)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("complete", &complete);
  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("star", &star);
  m.def("empty_graph", &empty_graph);
  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);
  m.def("complement", &complement);
  m.def("is_connected", &is_connected);
  m.def("parse_graph6", &parse_graph6);
  m.def("emit_graph6", &emit_graph6);
  m.def("clique_join", [](std::vector<CliqueSize> sizes) { return build_graph(CliqueJoinSpec(std::move(sizes))); });

  m.def("distance_matrix", [](const Graph& g) {
    const auto d = distance_matrix(g);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(d.order()));
    for (int i = 0; i < d.order(); ++i)
      for (int j = 0; j < d.order(); ++j) rows[i].push_back(d(i, j));
    return rows;
  });
  m.def("char_poly", [](const Graph& g) { return poly_list(char_poly_exact(distance_matrix(g))); },
        "Ascending integer coefficients of det(xI - D(g)).");
  m.def(
      "lambda_enclosure",
      [](const Graph& g, int k, const py::object& width) { return interval(lambda_k_enclosure(g, k, from_py(width))); },
      py::arg("g"), py::arg("k"), py::arg("width") = "1/1000000000",
      "(lo, hi) as Fractions with lo < lambda_k <= hi.");
  m.def("compare_lambda2_threshold",
        [](const Graph& g) { return std::string(to_string(compare_lambda2_threshold(g))); });
  m.def("float_spectrum", [](const Graph& g) { return float_spectrum(distance_matrix(g)); });
  m.def("count_greater", [](const Graph& g, const py::object& t) {
    return sturm_count_greater(char_poly_exact(distance_matrix(g)), from_py(t));
  });

  m.def("theorem_condition", [](std::vector<CliqueSize> sizes) {
    const auto c = theorem_condition(sizes);
    return py::make_tuple(c.holds, c.label);
  });
  m.def("classify", [](const Graph& g) {
    const Verdict v = classify(g);
    py::dict d;
    d["structural"] = v.structural;
    d["spectral"] = std::string(to_string(v.spectral));
    d["agree"] = v.agree;
    d["condition"] = v.condition;
    d["form"] = describe(v.form);
    d["lambda2_enclosure"] = interval(v.lambda2_enclosure);
    return d;
  });

  m.def("family_polynomial", [](const std::string& kind, const std::vector<CliqueSize>& params) {
    return poly_list(make_family_polynomial(parse_family_kind(kind), params).poly);
  });
  m.def("eval_family", [](const std::string& kind, const std::vector<CliqueSize>& params, const py::object& t) {
    return to_py(eval_at(make_family_polynomial(parse_family_kind(kind), params), from_py(t)));
  });
  m.def("threshold", [] { return to_py(lambda2_threshold()); });

  m.def(
      "verify_theorem",
      [](int max_n, int workers) {
        CensusReport r;
        {
          py::gil_scoped_release release;
          r = verify_theorem(max_n, VerifyOptions{workers, kDefaultEnumerationCap});
        }
        return census_dict(r);
      },
      py::arg("max_n"), py::arg("workers") = 1);
}
