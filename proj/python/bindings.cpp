#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "platykit/constructions.hpp"
#include "platykit/generation.hpp"
#include "platykit/graph.hpp"
#include "platykit/hamiltonicity.hpp"
#include "platykit/invariants.hpp"
#include "platykit/isomorphism.hpp"

namespace py = pybind11;
using namespace platykit;

namespace {

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::object witness_vertices(const std::optional<HamWitness>& w) {
  if (!w) return py::none();
  return py::cast(w->vertices);
}

py::int_ big_int(const GroupOrder& order) {
  return py::int_(py::str(order.to_string()));
}

std::vector<Graph> graphs_from_strings(const std::vector<std::string>& lines) {
  std::vector<Graph> graphs;
  graphs.reserve(lines.size());
  for (const auto& s : lines) graphs.push_back(decode_graph6(s));
  return graphs;
}

}  // namespace

PYBIND11_MODULE(platykit, m) {
  m.doc() = "Platypus graphs: hamiltonicity predicates, invariants, constructions and generation";
  m.attr("__version__") = PLATYKIT_VERSION;

  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_pairs), py::arg("order"),
           py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("from_graph6", &decode_graph6, py::arg("text"))
      .def("graph6", &encode_graph6)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &edge_pairs)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("delete_vertex", &delete_vertex)
      .def("relabeled", [](const Graph& g, const std::vector<int>& perm) { return g.relabeled(perm); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) +
               ")";
      });

  py::class_<PropertyReport>(m, "PropertyReport")
      .def_readonly("predicate", &PropertyReport::predicate)
      .def_readonly("verdict", &PropertyReport::verdict)
      .def_readonly("applicable", &PropertyReport::applicable)
      .def_readonly("vertex", &PropertyReport::vertex)
      .def_readonly("reason", &PropertyReport::reason)
      .def_readonly("nodes_searched", &PropertyReport::nodes_searched)
      .def_property_readonly("witness",
                             [](const PropertyReport& r) { return witness_vertices(r.witness); })
      .def_property_readonly("pair",
                             [](const PropertyReport& r) -> py::object {
                               if (!r.pair) return py::none();
                               return py::make_tuple(r.pair->u, r.pair->v);
                             })
      .def("__bool__", [](const PropertyReport& r) { return r.verdict; })
      .def("__repr__", [](const PropertyReport& r) {
        return "PropertyReport(" + r.predicate + ", " + (r.verdict ? "True" : "False") +
               (r.reason.empty() ? "" : ", '" + r.reason + "'") + ")";
      });

  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);

  m.def("hamiltonian_cycle",
        [](const Graph& g) { return witness_vertices(find_hamiltonian_cycle(g)); });
  m.def(
      "hamiltonian_path",
      [](const Graph& g, std::optional<std::pair<int, int>> endpoints) {
        return witness_vertices(find_hamiltonian_path(g, endpoints));
      },
      py::arg("graph"), py::arg("endpoints") = py::none());
  m.def("is_hamiltonian", &is_hamiltonian);
  m.def("is_traceable", &is_traceable);
  m.def("is_platypus", &is_platypus);
  m.def("is_hypohamiltonian", &is_hypohamiltonian);
  m.def("is_hypotraceable", &is_hypotraceable);
  m.def("is_homogeneously_traceable", &is_homogeneously_traceable);
  m.def("is_maximally_non_hamiltonian", &is_maximally_non_hamiltonian);

  m.def("girth", [](const Graph& g) -> py::object {
    const int value = girth(g);
    if (value == kInfiniteGirth) return py::none();
    return py::int_(value);
  });
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("is_planar", &is_planar);
  m.def("is_three_edge_colorable", &is_three_edge_colorable);
  m.def("is_snark", &is_snark);

  m.def("canonical_string", &canonical_string);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("automorphism_group_order",
        [](const Graph& g) { return big_int(automorphism_group_order(g)); });

  m.def("generalized_petersen", &generalized_petersen, py::arg("n"), py::arg("k"));
  m.def("petersen_prism", &petersen_prism, py::arg("n"), py::arg("k"));
  m.def("dotted_prism", &dotted_prism);
  m.def("d_operation", &d_operation);
  m.def("expand_vertex_to_triangle", &expand_vertex_to_triangle);
  m.def("fixture", py::overload_cast<std::string_view>(&fixture));
  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (FixtureId id : all_fixtures()) names.emplace_back(fixture_name(id));
    return names;
  });

  m.def(
      "generate_platypuses",
      [](int order, int min_girth, int jobs, bool override_guard) {
        GenSpec spec;
        spec.order = order;
        spec.min_girth = min_girth;
        spec.jobs = jobs;
        spec.override_guard = override_guard;
        return generate_platypuses(spec).canonical_list;
      },
      py::arg("order"), py::arg("min_girth") = 3, py::arg("jobs") = 1,
      py::arg("override_guard") = false, py::call_guard<py::gil_scoped_release>());
  m.def(
      "generate_all_graphs",
      [](int order, int min_girth, int jobs, bool override_guard) {
        return generate_all_graphs(order, min_girth, jobs, override_guard).canonical_list;
      },
      py::arg("order"), py::arg("min_girth") = 3, py::arg("jobs") = 1,
      py::arg("override_guard") = false, py::call_guard<py::gil_scoped_release>());
  m.def("audit", [](const std::vector<std::string>& lines) {
    const auto graphs = graphs_from_strings(lines);
    const AuditReport report = audit_stream(graphs);
    py::list violations;
    for (const auto& v : report.violations)
      violations.append(py::dict(py::arg("canonical") = v.canonical, py::arg("rule") = v.rule,
                                 py::arg("detail") = v.detail));
    return py::dict(py::arg("examined") = report.examined,
                    py::arg("platypuses") = report.platypuses,
                    py::arg("skipped") = report.skipped, py::arg("violations") = violations);
  });
}
