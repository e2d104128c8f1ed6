#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tperfect/canonical.hpp"
#include "tperfect/cli.hpp"
#include "tperfect/color.hpp"
#include "tperfect/io.hpp"
#include "tperfect/patterns.hpp"
#include "tperfect/polytope.hpp"
#include "tperfect/recognize.hpp"
#include "tperfect/report.hpp"
#include "tperfect/tminor.hpp"

namespace py = pybind11;
using namespace tperfect;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the tperfect package";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ScopeError>(m, "ScopeError", m.attr("GraphError").ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<Edge>& edges) { return Graph::from_edges(order, edges); }),
           py::arg("order"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
        return g.neighbors(v).members();
      })
      .def("to_graph6", [](const Graph& g) { return format_graph6(g); })
      .def("to_edge_list", [](const Graph& g) { return format_edge_list(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
  m.def("named_graph", [](const std::string& name) { return named_graph(PatternName::parse(name)); }, py::arg("name"));
  m.def("enumerate_graphs", &enumerate_graphs, py::arg("order"));
  m.def("is_fork_free", &is_fork_free);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("duplicate_vertex", &duplicate_vertex, py::arg("graph"), py::arg("vertex"), py::arg("copies") = 1);

  m.def(
      "recognize_json",
      [](const Graph& g, bool bounded) {
        RecognizeOptions opts;
        if (bounded) opts.hole_search = HoleSearchMode::Bounded;
        Verdict v;
        {
          py::gil_scoped_release release;
          v = recognize(g, opts);
        }
        return dump(to_json(v));
      },
      py::arg("graph"), py::arg("bounded") = false);
  m.def("verify_verdict_json", [](const Graph& g, const std::string& text) {
    return verify_verdict(g, verdict_from_json(Json::parse(text)));
  });
  m.def("three_color_json", [](const Graph& g) { return dump(to_json(three_color(g))); });
  m.def(
      "tminor_json",
      [](const Graph& g, std::optional<std::size_t> budget) {
        TMinorOptions opts = TMinorOptions::defaults_for(g);
        if (budget) opts.budget = *budget;
        py::gil_scoped_release release;
        return dump(to_json(has_forbidden_t_minor(g, opts)));
      },
      py::arg("graph"), py::arg("budget") = py::none());
  m.def(
      "odd_holes",
      [](const Graph& g, int min_len, std::optional<int> max_len) {
        std::vector<std::vector<Vertex>> out;
        for (auto& h : enumerate_induced_odd_cycles(g, min_len, max_len)) out.push_back(std::move(h.cycle));
        return out;
      },
      py::arg("graph"), py::arg("min_len") = 5, py::arg("max_len") = py::none());

  m.def("t_perfect_oracle", [](const Graph& g) {
    py::gil_scoped_release release;
    return t_perfect_oracle(g);
  });
  m.def("polytope_vertices", [](const Graph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& x : enumerate_vertices(build_system(g))) {
      std::vector<std::string> row;
      for (const auto& xi : x) row.push_back(format_rational(xi));
      out.push_back(std::move(row));
    }
    return out;
  });
  m.def("alpha_w", [](const Graph& g, std::vector<std::int64_t> w) { return alpha_w(g, Weighting(std::move(w))); });
  m.def("min_w_cover_json", [](const Graph& g, std::vector<std::int64_t> w) {
    return dump(to_json(min_w_cover(g, Weighting(std::move(w)))));
  });
  m.def("strong_check_json", [](const Graph& g, int w_max) { return dump(to_json(strong_t_perfect_check(g, w_max))); },
        py::arg("graph"), py::arg("w_max") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
