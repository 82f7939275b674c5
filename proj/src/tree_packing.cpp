#include "lpr/tree_packing.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>

namespace lpr::graphs {

namespace {

constexpr std::uint32_t kUnassigned = UINT32_MAX;

// Two edge-disjoint forests over a shared edge set, with augmenting-path
// insertion (matroid union of two graphic matroids).
class ForestPacking {
 public:
  ForestPacking(const Graph& g) : g_(g), assignment_(g.edge_count(), kUnassigned) {
    adj_[0].resize(g.vertex_count());
    adj_[1].resize(g.vertex_count());
  }

  // Tries to grow |F0| + |F1| by one using edge e; returns false when e is
  // spanned by the current union matroid.
  bool add_edge(std::uint32_t e) {
    const std::size_t m = g_.edge_count();
    std::vector<std::uint32_t> parent_elem(m, kUnassigned), parent_forest(m, 0);
    std::vector<bool> visited(m, false);
    std::deque<std::uint32_t> queue{e};
    visited[e] = true;
    while (!queue.empty()) {
      const std::uint32_t z = queue.front();
      queue.pop_front();
      for (int forest : {0, 1}) {
        if (assignment_[z] == static_cast<std::uint32_t>(forest)) continue;
        const Edge ze = g_.edges()[z];
        const auto cycle = forest_path(forest, ze.u, ze.v);
        if (!cycle.has_value()) {
          augment(z, forest, parent_elem, parent_forest);
          return true;
        }
        for (std::uint32_t y : *cycle) {
          if (visited[y]) continue;
          visited[y] = true;
          parent_elem[y] = z;
          parent_forest[y] = static_cast<std::uint32_t>(forest);
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  std::size_t size(int forest) const { return count_[forest]; }

  std::vector<Edge> tree_edges(int forest) const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < assignment_.size(); ++i)
      if (assignment_[i] == static_cast<std::uint32_t>(forest)) out.push_back(g_.edges()[i]);
    return out;
  }

 private:
  // Edge ids on the forest path between a and b, or nullopt when a and b
  // are in different components (so the edge can enter the forest).
  std::optional<std::vector<std::uint32_t>> forest_path(int forest, std::uint32_t a,
                                                        std::uint32_t b) const {
    const auto& adj = adj_[forest];
    std::vector<std::uint32_t> prev_vertex(g_.vertex_count(), kUnassigned);
    std::vector<std::uint32_t> prev_edge(g_.vertex_count(), kUnassigned);
    std::deque<std::uint32_t> queue{a};
    prev_vertex[a] = a;
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      if (u == b) break;
      for (const auto& [to, eid] : adj[u]) {
        if (prev_vertex[to] != kUnassigned) continue;
        prev_vertex[to] = u;
        prev_edge[to] = eid;
        queue.push_back(to);
      }
    }
    if (prev_vertex[b] == kUnassigned) return std::nullopt;
    std::vector<std::uint32_t> path;
    for (std::uint32_t v = b; v != a; v = prev_vertex[v]) path.push_back(prev_edge[v]);
    return path;
  }

  void augment(std::uint32_t z, int forest, const std::vector<std::uint32_t>& parent_elem,
               const std::vector<std::uint32_t>& parent_forest) {
    // Walk back along the search tree: z enters `forest`; each predecessor
    // takes over the slot its child vacated.
    std::uint32_t cur = z;
    std::uint32_t target = static_cast<std::uint32_t>(forest);
    while (true) {
      const std::uint32_t old = assignment_[cur];
      if (old != kUnassigned) remove_from_forest(cur, old);
      insert_into_forest(cur, target);
      if (old == kUnassigned) break;  // reached the new element
      target = old;
      cur = parent_elem[cur];
      // by construction the new element is the only one without a parent
      (void)parent_forest;
    }
  }

  void insert_into_forest(std::uint32_t eid, std::uint32_t forest) {
    const Edge e = g_.edges()[eid];
    adj_[forest][e.u].push_back({e.v, eid});
    adj_[forest][e.v].push_back({e.u, eid});
    assignment_[eid] = forest;
    ++count_[forest];
  }

  void remove_from_forest(std::uint32_t eid, std::uint32_t forest) {
    const Edge e = g_.edges()[eid];
    auto drop = [&](std::uint32_t v) {
      auto& list = adj_[forest][v];
      list.erase(std::find_if(list.begin(), list.end(),
                              [&](const auto& p) { return p.second == eid; }));
    };
    drop(e.u);
    drop(e.v);
    assignment_[eid] = kUnassigned;
    --count_[forest];
  }

  const Graph& g_;
  std::vector<std::uint32_t> assignment_;
  std::array<std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>, 2> adj_;
  std::array<std::size_t, 2> count_ = {0, 0};
};

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

}  // namespace

std::optional<TreePair> two_edge_disjoint_spanning_trees(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return TreePair{};  // empty spanning trees
  if (g.edge_count() < 2 * n - 2) return std::nullopt;

  ForestPacking packing(g);
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) packing.add_edge(e);
  if (packing.size(0) != n - 1 || packing.size(1) != n - 1) return std::nullopt;
  return TreePair{packing.tree_edges(0), packing.tree_edges(1)};
}

bool has_two_edge_disjoint_spanning_trees(const Graph& g) {
  return two_edge_disjoint_spanning_trees(g).has_value();
}

bool is_redundantly_two_tree_connected(const Graph& g) {
  const auto base = two_edge_disjoint_spanning_trees(g);
  if (!base.has_value()) return false;
  if (g.vertex_count() <= 1) return true;
  std::vector<bool> in_witness(g.edge_count(), false);
  for (const Edge& e : base->first_tree) in_witness[g.edge_index(e)] = true;
  for (const Edge& e : base->second_tree) in_witness[g.edge_index(e)] = true;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    // Edges outside the witness leave the packing intact when deleted.
    if (!in_witness[i]) continue;
    if (!has_two_edge_disjoint_spanning_trees(g.without_edge(g.edges()[i]))) return false;
  }
  return true;
}

bool verify_tree_pair(const Graph& g, const TreePair& pair) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return pair.first_tree.empty() && pair.second_tree.empty();
  if (pair.first_tree.size() != n - 1 || pair.second_tree.size() != n - 1) return false;

  std::vector<bool> used(g.edge_count(), false);
  for (const auto* tree : {&pair.first_tree, &pair.second_tree}) {
    Dsu dsu(n);
    for (const Edge& e : *tree) {
      std::size_t idx;
      try {
        idx = g.edge_index(e);
      } catch (const EdgeNotFound&) {
        return false;
      }
      if (used[idx]) return false;  // shared or repeated edge
      used[idx] = true;
      if (!dsu.unite(e.u, e.v)) return false;  // cycle
    }
    // n-1 acyclic edges on n vertices span the graph.
  }
  return true;
}

}  // namespace lpr::graphs
