#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "munarini/cli.hpp"
#include "munarini/error.hpp"
#include "munarini/hypercube.hpp"
#include "munarini/io.hpp"
#include "munarini/verify.hpp"

namespace py = pybind11;
using namespace munarini;

namespace {

py::int_ to_py(const Integer& v) {
  return py::int_(py::module_::import("builtins").attr("int")(to_string(v)));
}

py::list coefficients(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

py::dict terms(const BiPoly& p) {
  py::dict out;
  for (const auto& [exps, c] : p.terms()) {
    out[py::make_tuple(exps.first, exps.second)] = to_py(c);
  }
  return out;
}

FamilyParams params(const std::string& family, std::size_t n, unsigned k) {
  FamilyParams p{parse_family(family), n, k};
  validate(p);
  return p;
}

std::vector<std::string> strings(std::size_t n, unsigned k) {
  std::vector<std::string> out;
  for (const auto& s : enumerate_pell_strings(n, k)) out.push_back(s.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_munarini, m) {
  m.doc() = "Munarini graphs, generalized Pell graphs and their cube polynomials";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<UnsupportedParameter>(m, "UnsupportedParameter",
                                               PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError",
                                           PyExc_RuntimeError);
  py::register_exception<MedianClosureError>(m, "MedianClosureError",
                                             PyExc_LookupError);

  m.def("enumerate_pell_strings", &strings, py::arg("n"), py::arg("k"));
  m.def("is_pell_string",
        [](const std::vector<Symbol>& s, unsigned k) { return is_pell_string(s, k); },
        py::arg("symbols"), py::arg("k"));
  m.def("encode_psi",
        [](const std::string& u, unsigned k) {
          return encode_psi(PellString::parse(u, k)).to_string();
        },
        py::arg("u"), py::arg("k"));
  m.def("decode_psi",
        [](const std::string& v, unsigned k) {
          return decode_psi(BinaryLabel::parse(v), k).to_string();
        },
        py::arg("v"), py::arg("k"));
  m.def("weight",
        [](const std::string& u, unsigned k) { return weight(PellString::parse(u, k)); },
        py::arg("u"), py::arg("k"));
  m.def("fib_k", [](std::size_t n, unsigned k) { return to_py(fib_k(n, k)); },
        py::arg("n"), py::arg("k"));

  py::class_<LabeledGraph>(m, "Graph")
      .def_property_readonly("order", &LabeledGraph::order)
      .def_property_readonly("size", &LabeledGraph::size)
      .def_property_readonly("vertices",
                             [](const LabeledGraph& g) {
                               std::vector<std::string> out;
                               for (auto& l : g.vertices()) out.push_back(label_text(l));
                               return out;
                             })
      .def_property_readonly("edges", &LabeledGraph::edges)
      .def("degree", &LabeledGraph::degree)
      .def("max_degree", &LabeledGraph::max_degree)
      .def("to_json", [](const LabeledGraph& g) { return to_json(g); })
      .def("to_dot", [](const LabeledGraph& g) { return to_dot(g); })
      .def("to_edgelist", [](const LabeledGraph& g) { return to_edgelist(g); })
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__repr__", [](const LabeledGraph& g) {
        std::ostringstream s;
        s << "<Graph " << family_name(g.params().family) << " n=" << g.params().n
          << " k=" << g.params().k << " |V|=" << g.order() << " |E|=" << g.size()
          << ">";
        return s.str();
      });

  m.def("build",
        [](const std::string& family, std::size_t n, unsigned k) {
          return build(params(family, n, k));
        },
        py::arg("family"), py::arg("n") = 0, py::arg("k") = 1);
  m.def("graph_from_json", [](const std::string& text) { return graph_from_json(text); });

  m.def("is_isometric",
        [](const LabeledGraph& g) { return check_isometric(embed(g)).isometric; });
  m.def("is_daisy_cube",
        [](const LabeledGraph& g) { return find_daisy_root(embed(g)).has_value(); });
  m.def("is_median_closed",
        [](const LabeledGraph& g) { return check_median_closed(embed(g)).median_closed; });
  m.def("cube_census", [](const LabeledGraph& g) { return coefficients(cube_census(embed(g))); });
  m.def("maximal_cube_census",
        [](const LabeledGraph& g) { return coefficients(maximal_cube_census(embed(g))); });

  m.def("weight_poly",
        [](std::size_t n, unsigned k) { return coefficients(weight_poly(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("cube_poly",
        [](std::size_t n, unsigned k) { return coefficients(cube_poly(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("maximal_cube_poly",
        [](std::size_t n, unsigned k) { return coefficients(maximal_cube_poly(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("distance_cube_poly",
        [](std::size_t n, unsigned k) { return terms(distance_cube_poly(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("cube_number", [](std::size_t n, unsigned k) { return to_py(cube_number(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("cube_number_series",
        [](unsigned k, std::size_t order) {
          py::list out;
          for (const auto& q : cube_number_series(k, order)) out.append(to_py(q));
          return out;
        },
        py::arg("k"), py::arg("order"));
  m.def("count_edges", [](std::size_t n, unsigned k) { return to_py(count_edges_closed_form(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def("verify",
        [](const std::string& suite, std::size_t n_max, unsigned k_max) {
          const auto report = verify_bounds(parse_suite(suite), n_max, k_max);
          std::vector<std::string> failures;
          for (const auto& c : report.checks) {
            if (!c.passed) failures.push_back(c.suite + ": " + c.name + ": " + c.detail);
          }
          return py::make_tuple(report.checks.size(), failures);
        },
        py::arg("suite") = "all", py::arg("n_max") = 5, py::arg("k_max") = 3);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
