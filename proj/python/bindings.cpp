#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cutcount/census.hpp"
#include "cutcount/decompose.hpp"
#include "cutcount/extremal.hpp"
#include "cutcount/families.hpp"
#include "cutcount/graph_io.hpp"
#include "cutcount/verify.hpp"

namespace py = pybind11;
using namespace cutcount;

namespace {

py::int_ to_python(const Count& c) {
  const std::string digits = to_decimal(c);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

VertexSet to_set(const std::vector<Vertex>& vs, const Graph& g) {
  VertexSet s = 0;
  for (Vertex v : vs) {
    g.check_vertex(v);
    s |= singleton(v);
  }
  return s;
}

std::vector<std::vector<Vertex>> blocks_of(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (VertexSet b : block_cut_tree(g).blocks) out.push_back(members(b));
  return out;
}

py::tuple report_tuple(const VerifyReport& report) {
  py::list items;
  for (const VerifyItem& item : report.items) {
    items.append(py::make_tuple(std::string(to_string(item.outcome)), item.name, item.detail));
  }
  return py::make_tuple(report.passed(), items);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connected subgraph counting, cut-vertex decomposition and extremal search.";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph(n, es);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + serialize_graph6(g) + ")"; });

  m.def("from_graph6", &parse_graph6, py::arg("text"));
  m.def("to_graph6", &serialize_graph6, py::arg("graph"));
  m.def("from_edge_list", &parse_edge_list, py::arg("text"));
  m.def("to_edge_list", &serialize_edge_list, py::arg("graph"));
  m.def("path", &path_graph);
  m.def("cycle", &cycle_graph);
  m.def("star", &star_graph);
  m.def("complete", &complete_graph);

  m.def("is_connected", py::overload_cast<const Graph&>(&is_connected));
  m.def("cut_vertices", [](const Graph& g) { return members(cut_vertices(g)); });
  m.def("blocks", &blocks_of);
  m.def("girth", [](const Graph& g) -> std::optional<int> {
    const Girth gi = girth(g);
    if (gi.is_infinite()) return std::nullopt;
    return gi.value();
  });
  m.def("distance", &distance);

  m.def("count", [](const Graph& g) { return to_python(count_connected_subgraphs(g)); },
        "Number of connected subgraphs, by enumeration.");
  m.def("subgraph_number", [](const Graph& g, Vertex v) { return to_python(subgraph_number(g, v)); });
  m.def("count_containing",
        [](const Graph& g, const std::vector<Vertex>& vs) { return to_python(count_containing(g, to_set(vs, g))); });
  m.def("count_decomposed", [](const Graph& g) { return to_python(count_via_decomposition(g)); },
        "Number of connected subgraphs, by splitting at cut vertices.");
  m.def("subgraph_number_decomposed",
        [](const Graph& g, Vertex v) { return to_python(subgraph_number_via_decomposition(g, v)); });

  m.def("family", [](const std::string& spec) {
    const FamilyGraph fg = build(parse_family(spec));
    py::dict special;
    for (const auto& [tag, v] : fg.special) special[py::str(std::string(tag_name(tag)))] = v;
    return py::make_tuple(fg.graph, special);
  });
  m.def("closed_form_F", [](const std::string& spec) { return to_python(closed_form_F(parse_family(spec))); });
  m.def("closed_form_f", [](const std::string& spec, const std::string& tag) {
    const auto t = parse_tag(tag);
    if (!t) throw InvalidFamily("unknown vertex tag '" + tag + "'");
    return to_python(closed_form_f(parse_family(spec), *t));
  });

  m.def(
      "search_json",
      [](int n, std::optional<int> k, std::optional<int> girth, const std::string& subset,
         const std::string& objective, int jobs) {
        const auto filter = parse_tree_filter(subset);
        if (!filter) throw std::invalid_argument("subset must be all, trees or nontrees");
        if (objective != "F" && objective != "minf") throw std::invalid_argument("objective must be F or minf");
        const ClassSpec cls{n, k, girth, *filter};
        const Objective obj = objective == "F" ? Objective::F : Objective::MinVertexSubgraphNumber;
        py::gil_scoped_release release;
        return to_json(search(cls, obj, {.jobs = jobs}));
      },
      py::arg("n"), py::arg("k") = py::none(), py::arg("girth") = py::none(), py::arg("subset") = "all",
      py::arg("objective") = "F", py::arg("jobs") = 1);

  m.def(
      "verify",
      [](const std::string& suite, int n_max) {
        VerifyReport report;
        {
          py::gil_scoped_release release;
          if (suite == "table1") {
            report = verify_table1(n_max);
          } else if (suite == "theorems") {
            report = verify_theorems(n_max);
          } else if (suite == "formulas") {
            report = verify_formulas(n_max);
          } else {
            throw std::invalid_argument("suite must be table1, theorems or formulas");
          }
        }
        return report_tuple(report);
      },
      py::arg("suite"), py::arg("n_max") = 9);
}
