#include "lpr/constructions.hpp"

#include <algorithm>
#include <map>

#include "lpr/connectivity.hpp"
#include "lpr/tree_packing.hpp"

namespace lpr::constructions {

using field::Rat;
using field::RationalField;
using graphs::Edge;
using graphs::Graph;
using rigidity::Configuration;
using rigidity::PExponent;

Graph k4_minus_extension(const Graph& g, Edge e) {
  g.edge_index(e);  // throws EdgeNotFound
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  const std::uint32_t u1 = n, u2 = n + 1;
  auto edges = g.without_edge(e).edges();
  edges.push_back({e.u, u1});
  edges.push_back({e.u, u2});
  edges.push_back({e.v, u1});
  edges.push_back({e.v, u2});
  edges.push_back({u1, u2});
  return Graph(n + 2, std::move(edges));
}

Graph generalized_vertex_split(const Graph& g, std::uint32_t v, const std::set<std::uint32_t>& n0,
                               std::uint32_t x) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  if (v >= n || x >= n) throw InvalidSplit("vertex out of range");
  if (x == v) throw InvalidSplit("x must differ from the split vertex");
  if (n0.count(x)) throw InvalidSplit("x must not lie in n0");
  for (std::uint32_t u : n0)
    if (!g.has_edge(v, u)) throw InvalidSplit("n0 must be a subset of the neighbourhood of v");

  const std::uint32_t v0 = n;  // fresh vertex joined to n0; old v keeps the rest
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool at_v = e.u == v || e.v == v;
    const std::uint32_t other = e.u == v ? e.v : e.u;
    if (at_v && n0.count(other))
      edges.push_back(graphs::make_edge(v0, other));
    else
      edges.push_back(e);
  }
  edges.push_back({v, v0});
  edges.push_back(graphs::make_edge(v0, x));
  return Graph(n + 1, std::move(edges));
}

Graph subdivide_edge(const Graph& g, Edge e) {
  g.edge_index(e);  // throws EdgeNotFound
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  auto edges = g.without_edge(e).edges();
  edges.push_back({e.u, n});
  edges.push_back({e.v, n});
  return Graph(n + 1, std::move(edges));
}

namespace {

Rat rp(long num) { return Rat(num); }

void validate_framework(const Framework& fw, std::size_t laplacian_axis) {
  const RationalField f;
  const PExponent p(fw.p);
  const std::size_t n = fw.graph.vertex_count();
  const std::size_t d = fw.config.d;
  require(rigidity::is_self_stress(f, fw.graph, fw.config, fw.stress, p),
          "base framework stress fails the equilibrium condition");
  const auto jac = rigidity::rigidity_matrix(f, fw.graph, fw.config, p);
  require(field::rank(f, jac) == d * n - d, "base framework rigidity matrix rank is not dn - d");
  const auto wk = rigidity::coordinated_stress(f, fw.graph, fw.config, fw.stress, laplacian_axis, p);
  require(field::rank(f, rigidity::weighted_laplacian(f, fw.graph, wk)) == n - 2,
          "base framework coordinated Laplacian rank is not n - 2");
}

// Symmetric permutation out[i][j] = in[order[i]][order[j]].
field::Matrix<Rat> permute_symmetric(const field::Matrix<Rat>& m,
                                     const std::vector<std::size_t>& order) {
  field::Matrix<Rat> out(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) out.at(i, j) = m.at(order[i], order[j]);
  return out;
}

}  // namespace

Framework base_framework(BaseName name, PExponent p) {
  const long pv = p.value();
  Framework fw;
  fw.p = p.value();
  std::size_t axis = 0;

  switch (name) {
    case BaseName::K5minus: {
      fw.graph = graphs::k5_minus();
      fw.config = Configuration<Rat>(
          5, 2, {rp(0), rp(0), rp(1), rp(0), rp(0), rp(1), rp(2), rp(1), rp(1), rp(2)});
      const Rat two_p = field::rat_pow(rp(2), pv);
      const Rat two_2mp = field::rat_pow(rp(2), 2 - pv);
      // Edges (01,02,03,04,12,13,14,23,24).
      fw.stress = {two_p + 2, two_p + 2, rp(-2), rp(-2), -two_p,
                   rp(2),     rp(2) - two_2mp, rp(2) - two_2mp, rp(2)};
      axis = 0;
      break;
    }
    case BaseName::B1: {
      fw.graph = graphs::b1_graph();
      fw.config = Configuration<Rat>(6, 2,
                                     {rp(0), rp(0), rp(1), rp(0), rp(2), rp(0), rp(1), rp(1),
                                      rp(2), rp(1), rp(3), rp(1)});
      const Rat c = field::rat_pow(rp(2), pv - 1) - 1;  // 2^(p-1) - 1
      // Edges (01,03,04,12,13,14,15,24,25,34,45).
      fw.stress = {c, rp(1), rp(-1), rp(-1), rp(-1), rp(0), rp(1), rp(1), rp(-1), rp(1), -c};
      axis = 1;
      break;
    }
    case BaseName::K3_1d: {
      fw.graph = graphs::complete_graph(3);
      fw.config = Configuration<Rat>(3, 1, {rp(0), rp(1), rp(3)});
      const Rat x0 = fw.config.at(0, 0), x1 = fw.config.at(1, 0), x2 = fw.config.at(2, 0);
      // Closed form ((x0-x1)^(1-p), (x2-x0)^(1-p), (x1-x2)^(1-p)).
      fw.stress = {field::rat_pow(x0 - x1, 1 - pv), field::rat_pow(x2 - x0, 1 - pv),
                   field::rat_pow(x1 - x2, 1 - pv)};
      axis = 0;
      break;
    }
  }
  validate_framework(fw, axis);
  return fw;
}

Framework k4_extension_framework_transfer(const Framework& fw, Edge e) {
  const RationalField f;
  const PExponent p(fw.p);
  if (fw.config.d != 2) throw Error("K4^- transfer is a planar construction");
  const std::size_t idx = fw.graph.edge_index(e);
  const Rat we = fw.stress[idx];
  if (f.is_zero(we)) throw ZeroStressOnEdge("stress vanishes on the chosen edge");
  const Rat xa = fw.config.at(e.u, 0), ya = fw.config.at(e.u, 1);
  const Rat xb = fw.config.at(e.v, 0), yb = fw.config.at(e.v, 1);
  if (xa == xb || ya == yb)
    throw DegenerateEdge("edge endpoints must differ on both axes for the rectangle placement");

  const std::size_t n = fw.graph.vertex_count();
  const auto jac = rigidity::rigidity_matrix(f, fw.graph, fw.config, p);
  require(field::rank(f, jac) == 2 * n - 2, "parent framework is not infinitesimally rigid");

  Framework out;
  out.p = fw.p;
  out.graph = k4_minus_extension(fw.graph, e);
  const auto u1 = static_cast<std::uint32_t>(n);
  const auto u2 = static_cast<std::uint32_t>(n + 1);

  auto coords = fw.config.coords;
  coords.insert(coords.end(), {xa, yb, xb, ya});  // q(u1) = (xa, yb), q(u2) = (xb, ya)
  out.config = Configuration<Rat>(n + 2, 2, std::move(coords));

  std::map<Edge, Rat> w;
  for (std::size_t i = 0; i < fw.graph.edge_count(); ++i) {
    if (i == idx) continue;
    w[fw.graph.edges()[i]] = fw.stress[i];
  }
  w[graphs::make_edge(e.u, u1)] = we;
  w[graphs::make_edge(e.u, u2)] = we;
  w[graphs::make_edge(e.v, u1)] = we;
  w[graphs::make_edge(e.v, u2)] = we;
  w[graphs::make_edge(u1, u2)] = -we;
  for (const Edge& ne : out.graph.edges()) out.stress.push_back(w.at(ne));

  // Certify the transferred framework exactly.
  require(rigidity::is_self_stress(f, out.graph, out.config, out.stress, p),
          "transferred stress fails the equilibrium condition");
  const auto jac2 = rigidity::rigidity_matrix(f, out.graph, out.config, p);
  require(field::rank(f, jac2) == 2 * (n + 2) - 2, "extended framework lost infinitesimal rigidity");

  const auto wk = rigidity::coordinated_stress(f, out.graph, out.config, out.stress, 0, p);
  const auto lap = rigidity::weighted_laplacian(f, out.graph, wk);
  require(field::rank(f, lap) == n, "extended coordinated Laplacian rank is not n' - 2");

  std::vector<std::size_t> order{n, n + 1};
  for (std::size_t v = 0; v < n; ++v) order.push_back(v);
  const auto parent_wk = rigidity::coordinated_stress(f, fw.graph, fw.config, fw.stress, 0, p);
  const auto parent_lap = rigidity::weighted_laplacian(f, fw.graph, parent_wk);
  require(field::schur_complement(f, permute_symmetric(lap, order), 2) == parent_lap,
          "Schur complement does not reproduce the parent Laplacian");
  return out;
}

Framework subdivision_framework_transfer(const Framework& fw, Edge e) {
  const RationalField f;
  const PExponent p(fw.p);
  if (fw.config.d != 1) throw Error("subdivision transfer is a 1-dimensional construction");
  const std::size_t idx = fw.graph.edge_index(e);
  const Rat we = fw.stress[idx];
  if (f.is_zero(we)) throw ZeroStressOnEdge("stress vanishes on the chosen edge");
  const Rat xa = fw.config.at(e.u, 0), xb = fw.config.at(e.v, 0);
  if (xa == xb) throw DegenerateEdge("edge endpoints coincide");

  const std::size_t n = fw.graph.vertex_count();
  const auto jac = rigidity::rigidity_matrix(f, fw.graph, fw.config, p);
  require(field::rank(f, jac) == n - 1, "parent framework is not infinitesimally rigid");

  Framework out;
  out.p = fw.p;
  out.graph = subdivide_edge(fw.graph, e);
  const auto v0 = static_cast<std::uint32_t>(n);

  auto coords = fw.config.coords;
  coords.push_back((xa + xb) / 2);
  out.config = Configuration<Rat>(n + 1, 1, std::move(coords));

  const Rat scaled = field::rat_pow(rp(2), fw.p - 1) * we;
  std::map<Edge, Rat> w;
  for (std::size_t i = 0; i < fw.graph.edge_count(); ++i) {
    if (i == idx) continue;
    w[fw.graph.edges()[i]] = fw.stress[i];
  }
  w[graphs::make_edge(e.u, v0)] = scaled;
  w[graphs::make_edge(e.v, v0)] = scaled;
  for (const Edge& ne : out.graph.edges()) out.stress.push_back(w.at(ne));

  require(rigidity::is_self_stress(f, out.graph, out.config, out.stress, p),
          "transferred stress fails the equilibrium condition");
  const auto jac2 = rigidity::rigidity_matrix(f, out.graph, out.config, p);
  require(field::rank(f, jac2) == n, "subdivided framework lost infinitesimal rigidity");

  const auto wk = rigidity::coordinated_stress(f, out.graph, out.config, out.stress, 0, p);
  const auto lap = rigidity::weighted_laplacian(f, out.graph, wk);
  require(field::rank(f, lap) == n - 1, "subdivided coordinated Laplacian rank is not n' - 2");

  std::vector<std::size_t> order{n};
  for (std::size_t v = 0; v < n; ++v) order.push_back(v);
  const auto parent_wk = rigidity::coordinated_stress(f, fw.graph, fw.config, fw.stress, 0, p);
  const auto parent_lap = rigidity::weighted_laplacian(f, fw.graph, parent_wk);
  require(field::schur_complement(f, permute_symmetric(lap, order), 1) == parent_lap,
          "Schur complement does not reproduce the parent Laplacian");
  return out;
}

namespace {

bool in_class(const Graph& g) {
  return graphs::is_two_connected(g) && graphs::is_redundantly_two_tree_connected(g);
}

std::string edge_label(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(std::size_t count, std::size_t max_n,
                                         std::uint64_t seed) {
  if (max_n < 5) throw Error("corpus generation needs max_n >= 5");
  Rng rng(seed);

  std::vector<CorpusEntry> bases;
  bases.push_back({graphs::k5_minus(), {"base:K5-"}});
  if (max_n >= 6) bases.push_back({graphs::b1_graph(), {"base:B1"}});

  std::vector<CorpusEntry> out;
  for (const auto& b : bases) {
    if (out.size() < count) out.push_back(b);
  }

  while (out.size() < count) {
    CorpusEntry current = bases[rng.below(bases.size())];
    bool progressed = true;
    while (progressed && out.size() < count) {
      progressed = false;
      for (int attempt = 0; attempt < 24 && !progressed; ++attempt) {
        const Graph& g = current.graph;
        const auto n = static_cast<std::uint32_t>(g.vertex_count());
        const std::uint64_t pick = rng.below(3);
        if (pick == 0 && n + 2 <= max_n && g.edge_count() > 0) {
          const Edge e = g.edges()[rng.below(g.edge_count())];
          Graph candidate = k4_minus_extension(g, e);
          if (!in_class(candidate)) continue;
          current.graph = std::move(candidate);
          current.trace.push_back("k4_ext:" + edge_label(e));
          progressed = true;
        } else if (pick == 1) {
          std::vector<Edge> missing;
          for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v)
              if (!g.has_edge(u, v)) missing.push_back({u, v});
          if (missing.empty()) continue;
          const Edge e = missing[rng.below(missing.size())];
          Graph candidate = g.with_edge(e);
          if (!in_class(candidate)) continue;
          current.graph = std::move(candidate);
          current.trace.push_back("add_edge:" + edge_label(e));
          progressed = true;
        } else if (pick == 2 && n + 1 <= max_n) {
          const auto v = static_cast<std::uint32_t>(rng.below(n));
          const auto adj = g.adjacency();
          std::set<std::uint32_t> n0;
          for (std::uint32_t u : adj[v])
            if (rng.coin()) n0.insert(u);
          std::vector<std::uint32_t> xs;
          for (std::uint32_t u = 0; u < n; ++u)
            if (u != v && !n0.count(u)) xs.push_back(u);
          if (xs.empty()) continue;
          const std::uint32_t x = xs[rng.below(xs.size())];
          Graph candidate = generalized_vertex_split(g, v, n0, x);
          if (!in_class(candidate)) continue;
          current.graph = std::move(candidate);
          std::string label = "split:v=" + std::to_string(v) + ";n0=";
          bool first = true;
          for (std::uint32_t u : n0) {
            if (!first) label += ",";
            label += std::to_string(u);
            first = false;
          }
          label += ";x=" + std::to_string(x);
          current.trace.push_back(label);
          progressed = true;
        }
      }
      if (progressed) out.push_back(current);
    }
  }
  out.resize(count);
  return out;
}

}  // namespace lpr::constructions
