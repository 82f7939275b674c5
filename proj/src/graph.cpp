#include "lpr/graph.hpp"

#include <algorithm>

namespace lpr::graphs {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw Error("self-loop " + std::to_string(e.u));
    if (e.v >= n_) throw Error("edge endpoint " + std::to_string(e.v) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error("duplicate edge");
}

bool Graph::has_edge(std::uint32_t a, std::uint32_t b) const {
  const Edge e = make_edge(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::edge_index(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw EdgeNotFound("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::vector<std::uint32_t>> Graph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

Graph Graph::with_edge(Edge e) const {
  auto es = edges_;
  es.push_back(e);
  return Graph(n_, std::move(es));
}

Graph Graph::without_edge(Edge e) const {
  const std::size_t idx = edge_index(e);
  auto es = edges_;
  es.erase(es.begin() + static_cast<std::ptrdiff_t>(idx));
  return Graph(n_, std::move(es));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::uint32_t u = 0; u < n; ++u)
    es.push_back(make_edge(u, static_cast<std::uint32_t>((u + 1) % n)));
  return Graph(n, std::move(es));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::uint32_t u = 0; u + 1 < n; ++u) es.push_back({u, u + 1});
  return Graph(n, std::move(es));
}

Graph k5_minus() {
  return complete_graph(5).without_edge({3, 4});
}

Graph b1_graph() {
  return Graph(6, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

}  // namespace lpr::graphs
