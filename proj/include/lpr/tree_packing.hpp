#pragma once

#include <optional>

#include "lpr/graph.hpp"

namespace lpr::graphs {

struct TreePair {
  std::vector<Edge> first_tree;
  std::vector<Edge> second_tree;
};

// Certificate for 2-tree-connectivity: two edge-disjoint spanning trees,
// found by matroid-union augmentation over two graphic matroids.  Returns
// nullopt when no packing exists.
std::optional<TreePair> two_edge_disjoint_spanning_trees(const Graph& g);

bool has_two_edge_disjoint_spanning_trees(const Graph& g);

// true iff g - e is 2-tree-connected for every edge e.
bool is_redundantly_two_tree_connected(const Graph& g);

// Validates a claimed packing: edge-disjoint, both subsets of g, each a
// spanning tree (n-1 edges, acyclic, spanning) checked by union-find.
bool verify_tree_pair(const Graph& g, const TreePair& pair);

}  // namespace lpr::graphs
