#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lpr/constructions.hpp"
#include "lpr/experiments.hpp"
#include "lpr/global_rigidity.hpp"
#include "lpr/graph_io.hpp"
#include "lpr/sampling.hpp"

namespace py = pybind11;

using lpr::field::PrimeField;
using lpr::field::RationalField;
using lpr::graphs::Edge;
using lpr::graphs::Graph;
using lpr::rigidity::PExponent;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back(lpr::graphs::make_edge(u, v));
  return Graph(n, std::move(es));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_of(const Graph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

py::dict hitting_dict(const lpr::experiments::HittingTimes& h) {
  py::dict d;
  d["n"] = h.n;
  d["d"] = h.d;
  d["p"] = h.p;
  d["seed"] = h.seed;
  d["m_min_degree_d"] = h.m_min_degree_d;
  d["m_min_degree_d_plus_1"] = h.m_min_degree_d_plus_1;
  d["m_local_rigid"] = h.m_local_rigid;
  d["m_global_rigid"] = h.m_global_rigid;
  d["gr_is_upper_bound"] = h.gr_is_upper_bound;
  return d;
}

}  // namespace

PYBIND11_MODULE(lprigidity, m) {
  m.doc() = "Generic local and global rigidity of graphs in lp-spaces (p even, >= 4)";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &edges_of)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("complete_graph", &lpr::graphs::complete_graph, py::arg("n"));
  m.def("cycle_graph", &lpr::graphs::cycle_graph, py::arg("n"));
  m.def("k5_minus", &lpr::graphs::k5_minus);
  m.def("b1_graph", &lpr::graphs::b1_graph);
  m.def("parse_graph", [](const std::string& text) {
    std::istringstream in(text);
    return lpr::io::read_graph(in);
  });
  m.def("write_graph", &lpr::io::write_graph);

  m.def("connectivity_profile", [](const Graph& g) {
    const auto prof = lpr::graphs::connectivity_profile(g);
    py::dict d;
    d["connected"] = prof.connected;
    d["two_connected"] = prof.two_connected;
    d["bridge_count"] = prof.bridge_count;
    d["block_count"] = prof.block_count;
    d["two_edge_component_count"] = prof.two_edge_component_count;
    return d;
  });

  m.def("has_two_edge_disjoint_spanning_trees", &lpr::graphs::has_two_edge_disjoint_spanning_trees);
  m.def("two_edge_disjoint_spanning_trees", [](const Graph& g) -> py::object {
    const auto pair = lpr::graphs::two_edge_disjoint_spanning_trees(g);
    if (!pair) return py::none();
    auto tree = [](const std::vector<Edge>& t) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
      for (const auto& e : t) out.push_back({e.u, e.v});
      return out;
    };
    return py::make_tuple(tree(pair->first_tree), tree(pair->second_tree));
  });
  m.def("is_redundantly_two_tree_connected", &lpr::graphs::is_redundantly_two_tree_connected);

  m.def(
      "generic_local_rigidity",
      [](const Graph& g, std::size_t d, int p, std::size_t trials, std::uint64_t seed) {
        const auto r = lpr::rigidity::generic_local_rigidity(g, d, PExponent(p), trials, seed);
        py::dict out;
        out["rigid"] = r.rigid;
        out["rank"] = r.rank;
        out["target"] = r.target;
        return out;
      },
      py::arg("graph"), py::arg("d") = 2, py::arg("p") = 4, py::arg("trials") = 3,
      py::arg("seed") = 0);

  m.def(
      "stress_condition_report",
      [](const Graph& g, std::size_t d, int p, std::size_t trials, std::uint64_t seed) {
        const auto r = lpr::rigidity::stress_condition_report(g, d, PExponent(p), trials, seed);
        py::dict out;
        out["per_axis_rank"] = r.per_axis_rank;
        out["some_k"] = r.some_k;
        out["all_k"] = r.all_k;
        out["no_stress"] = r.no_stress;
        return out;
      },
      py::arg("graph"), py::arg("d") = 2, py::arg("p") = 4, py::arg("trials") = 3,
      py::arg("seed") = 0);

  m.def("global_rigidity_1d", &lpr::global_rigidity::global_rigidity_1d);
  m.def(
      "globally_rigid_plane",
      [](const Graph& g, int p, std::uint64_t seed) {
        const auto verdict = lpr::global_rigidity::global_rigidity_plane(
            g, PExponent(p), lpr::global_rigidity::PlaneMode::Both, seed);
        return *verdict.combinatorial;
      },
      py::arg("graph"), py::arg("p") = 4, py::arg("seed") = 0);

  m.def(
      "k4_minus_extension",
      [](const Graph& g, std::uint32_t u, std::uint32_t v) {
        return lpr::constructions::k4_minus_extension(g, lpr::graphs::make_edge(u, v));
      },
      py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def(
      "subdivide_edge",
      [](const Graph& g, std::uint32_t u, std::uint32_t v) {
        return lpr::constructions::subdivide_edge(g, lpr::graphs::make_edge(u, v));
      },
      py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def(
      "generalized_vertex_split",
      [](const Graph& g, std::uint32_t v, const std::vector<std::uint32_t>& n0, std::uint32_t x) {
        return lpr::constructions::generalized_vertex_split(
            g, v, std::set<std::uint32_t>(n0.begin(), n0.end()), x);
      },
      py::arg("graph"), py::arg("v"), py::arg("n0"), py::arg("x"));

  m.def(
      "generate_corpus",
      [](std::size_t count, std::size_t max_n, std::uint64_t seed) {
        std::vector<py::dict> out;
        for (auto& entry : lpr::constructions::generate_corpus(count, max_n, seed)) {
          py::dict d;
          d["graph"] = entry.graph;
          d["trace"] = entry.trace;
          out.push_back(d);
        }
        return out;
      },
      py::arg("count"), py::arg("max_n") = 12, py::arg("seed") = 0);

  m.def(
      "er_hitting_times",
      [](std::size_t n, std::size_t d, int p, std::uint64_t seed) {
        return hitting_dict(lpr::experiments::er_hitting_times(n, d, PExponent(p), seed));
      },
      py::arg("n"), py::arg("d") = 2, py::arg("p") = 4, py::arg("seed") = 0);

  py::register_exception<lpr::NoStress>(m, "NoStressError");
  py::register_exception<lpr::ParseError>(m, "GraphParseError");
}
