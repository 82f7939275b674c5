#include "lpr/experiments.hpp"

#include <algorithm>

#include "lpr/connectivity.hpp"
#include "lpr/global_rigidity.hpp"
#include "lpr/sampling.hpp"
#include "lpr/tree_packing.hpp"

namespace lpr::experiments {

using graphs::Edge;
using graphs::Graph;

namespace {

// One rank trial; a positive answer (rank = dn - d) is a certificate.
bool rank_certifies_rigidity(const Graph& g, std::size_t d, rigidity::PExponent p,
                             const field::PrimeField& f, std::uint64_t seed) {
  Rng rng(seed);
  const auto c = rigidity::sample_configuration(f, g.vertex_count(), d, rng);
  const auto jac = rigidity::rigidity_matrix(f, g, c, p);
  return field::rank(f, jac) == d * g.vertex_count() - d;
}

bool globally_rigid_now(const Graph& g, std::size_t d, rigidity::PExponent p,
                        const field::PrimeField& f, std::uint64_t seed) {
  if (d == 1) return graphs::is_two_connected(g);
  if (d == 2)
    return graphs::is_two_connected(g) && graphs::is_redundantly_two_tree_connected(g);
  // d >= 3: 2-connected plus locally rigid in d+1 is a sufficient condition.
  return graphs::is_two_connected(g) &&
         rank_certifies_rigidity(g, d + 1, p, f, seed) &&
         rank_certifies_rigidity(g, d + 1, p, f, derive_seed(seed, 0xc2));
}

}  // namespace

HittingTimes er_hitting_times(std::size_t n, std::size_t d, rigidity::PExponent p,
                              std::uint64_t seed, const field::PrimeField& f) {
  if (n < d + 2) throw Error("hitting-time experiment needs n >= d + 2");

  HittingTimes hit;
  hit.n = n;
  hit.d = d;
  hit.p = p.value();
  hit.seed = seed;
  hit.gr_is_upper_bound = d >= 3;

  // Adding a uniformly random missing edge at each step is the same process
  // as consuming a uniformly shuffled list of all edges.
  Rng rng(seed);
  std::vector<Edge> order;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) order.push_back({u, v});
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  bool lr_found = false, gr_found = false;
  for (std::size_t step = 1; step <= order.size() && !(lr_found && gr_found); ++step) {
    const Edge e = order[step - 1];
    edges.push_back(e);
    ++degree[e.u];
    ++degree[e.v];
    const std::size_t min_degree = *std::min_element(degree.begin(), degree.end());

    if (hit.m_min_degree_d == 0 && min_degree >= d) hit.m_min_degree_d = step;
    if (hit.m_min_degree_d_plus_1 == 0 && min_degree >= d + 1) hit.m_min_degree_d_plus_1 = step;

    // Minimum degree d and dn - d rows are necessary; skip the rank test
    // until both hold.
    if (!lr_found && min_degree >= d && edges.size() >= d * n - d) {
      const Graph g(n, edges);
      if (rank_certifies_rigidity(g, d, p, f, derive_seed(seed, 2 * step))) {
        // Confirmation trial at the hitting point (a positive rank is
        // already exact; this re-checks the arithmetic path).
        require(rank_certifies_rigidity(g, d, p, f, derive_seed(seed, 2 * step + 1)),
                "confirmation trial disagreed at the local-rigidity hitting point");
        hit.m_local_rigid = step;
        lr_found = true;
      }
    }
    // Edge-count necessities: 2-connectivity needs n edges, redundant
    // 2-tree-connectivity needs 2n - 1, local rigidity in d+1 needs
    // (d+1)(n-1) rows.
    const std::size_t gr_edge_floor = d == 1 ? n : (d == 2 ? 2 * n - 1 : (d + 1) * n - (d + 1));
    if (!gr_found && min_degree >= d + 1 && edges.size() >= gr_edge_floor) {
      const Graph g(n, edges);
      if (globally_rigid_now(g, d, p, f, derive_seed(seed, 0x6e0b + step))) {
        hit.m_global_rigid = step;
        gr_found = true;
      }
    }
  }
  require(lr_found && gr_found, "process ended before both hitting times were found");
  require(hit.m_min_degree_d <= hit.m_min_degree_d_plus_1, "degree hitting times out of order");
  require(hit.m_min_degree_d <= hit.m_local_rigid, "minimum degree d must precede local rigidity");
  require(hit.m_min_degree_d_plus_1 <= hit.m_global_rigid,
          "minimum degree d+1 must precede global rigidity");
  return hit;
}

std::vector<ThresholdRow> threshold_report(const std::vector<std::size_t>& n_list, std::size_t d,
                                           rigidity::PExponent p, std::size_t trials,
                                           std::uint64_t seed, const field::PrimeField& f) {
  if (trials < 1) throw Error("threshold report needs at least one trial");
  std::vector<ThresholdRow> rows;
  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    ThresholdRow row;
    row.n = n_list[ni];
    row.trials = trials;
    std::size_t lr_eq = 0, gr_eq = 0;
    double lr_gap = 0, gr_gap = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto hit = er_hitting_times(row.n, d, p, derive_seed(seed, ni * 1000003 + t), f);
      if (hit.m_local_rigid == hit.m_min_degree_d) ++lr_eq;
      if (hit.m_global_rigid == hit.m_min_degree_d_plus_1) ++gr_eq;
      lr_gap += static_cast<double>(hit.m_local_rigid - hit.m_min_degree_d);
      gr_gap += static_cast<double>(hit.m_global_rigid - hit.m_min_degree_d_plus_1);
    }
    row.freq_lr_eq_min_degree = static_cast<double>(lr_eq) / static_cast<double>(trials);
    row.freq_gr_eq_min_degree = static_cast<double>(gr_eq) / static_cast<double>(trials);
    row.mean_gap_lr = lr_gap / static_cast<double>(trials);
    row.mean_gap_gr = gr_gap / static_cast<double>(trials);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lpr::experiments
