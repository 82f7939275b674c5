#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpr/errors.hpp"

namespace lpr::graphs {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(std::uint32_t a, std::uint32_t b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 0..n-1 with a canonical sorted edge
// list (u < v, no duplicates, no self-loops).
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  // Index of an edge in the canonical list; throws EdgeNotFound.
  std::size_t edge_index(Edge e) const;

  std::vector<std::vector<std::uint32_t>> adjacency() const;
  std::vector<std::size_t> degrees() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

// K5 minus one edge and the six-vertex base graph B1, vertex-labelled as in
// their standard presentations.
Graph k5_minus();
Graph b1_graph();

}  // namespace lpr::graphs
