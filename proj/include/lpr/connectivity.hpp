#pragma once

#include "lpr/graph.hpp"

namespace lpr::graphs {

// Block/bridge decomposition summary.  `block_count` counts maximal
// 2-connected subgraphs with at least three vertices; bridge edges do not
// contribute.  `two_edge_component_count` counts the connected components
// left after deleting every bridge, singleton vertices included.
struct ConnectivityProfile {
  bool connected = false;
  bool two_connected = false;
  std::size_t bridge_count = 0;
  std::size_t block_count = 0;             // "a" in the 1-dim rank formula
  std::size_t two_edge_component_count = 0;  // "b" in the 1-dim rank formula
};

ConnectivityProfile connectivity_profile(const Graph& g);

bool is_connected(const Graph& g);

// Connected, n >= 3, and no cut vertex.
bool is_two_connected(const Graph& g);

}  // namespace lpr::graphs
