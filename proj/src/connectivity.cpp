#include "lpr/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace lpr::graphs {

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

constexpr std::uint32_t kNone = UINT32_MAX;

}  // namespace

ConnectivityProfile connectivity_profile(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(n);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    adj[e.u].push_back({e.v, static_cast<std::uint32_t>(i)});
    adj[e.v].push_back({e.u, static_cast<std::uint32_t>(i)});
  }

  std::vector<std::uint32_t> disc(n, kNone), low(n, 0);
  std::vector<bool> is_bridge(m, false), is_articulation(n, false);
  std::vector<std::uint32_t> edge_stack;
  std::uint32_t timer = 0;
  std::size_t components = 0;
  std::size_t blocks_ge3 = 0;

  struct Frame {
    std::uint32_t u;
    std::uint32_t parent_edge;
    std::size_t next;
    std::uint32_t children;
  };

  std::vector<Frame> stack;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (disc[s] != kNone) continue;
    ++components;
    disc[s] = low[s] = timer++;
    stack.push_back({s, kNone, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.u].size()) {
        const auto [v, eid] = adj[f.u][f.next++];
        if (eid == f.parent_edge) continue;
        if (disc[v] == kNone) {
          edge_stack.push_back(eid);
          disc[v] = low[v] = timer++;
          ++f.children;
          stack.push_back({v, eid, 0, 0});
        } else if (disc[v] < disc[f.u]) {
          edge_stack.push_back(eid);
          low[f.u] = std::min(low[f.u], disc[v]);
        }
        continue;
      }
      const Frame done = stack.back();
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_articulation[done.u] = true;
        continue;
      }
      Frame& par = stack.back();
      low[par.u] = std::min(low[par.u], low[done.u]);
      if (low[done.u] > disc[par.u]) is_bridge[done.parent_edge] = true;
      if (low[done.u] >= disc[par.u]) {
        if (par.parent_edge != kNone) is_articulation[par.u] = true;
        // Pop the block that ends with the tree edge into done.u.  A block
        // with a single edge is a bridge; two or more edges means a maximal
        // 2-connected subgraph on >= 3 vertices.
        std::size_t block_edges = 0;
        while (true) {
          const std::uint32_t eid = edge_stack.back();
          edge_stack.pop_back();
          ++block_edges;
          if (eid == done.parent_edge) break;
        }
        if (block_edges >= 2) ++blocks_ge3;
      }
    }
  }

  Dsu dsu(n);
  std::size_t two_edge_components = n;
  for (std::size_t i = 0; i < m; ++i) {
    if (is_bridge[i]) continue;
    if (dsu.unite(g.edges()[i].u, g.edges()[i].v)) --two_edge_components;
  }

  ConnectivityProfile profile;
  profile.connected = components <= 1;
  profile.bridge_count = static_cast<std::size_t>(std::count(is_bridge.begin(), is_bridge.end(), true));
  profile.block_count = blocks_ge3;
  profile.two_edge_component_count = two_edge_components;
  profile.two_connected = profile.connected && n >= 3 &&
                          std::none_of(is_articulation.begin(), is_articulation.end(),
                                       [](bool b) { return b; });
  return profile;
}

bool is_connected(const Graph& g) {
  return connectivity_profile(g).connected;
}

bool is_two_connected(const Graph& g) {
  return connectivity_profile(g).two_connected;
}

}  // namespace lpr::graphs
