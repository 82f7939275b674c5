#include "lpr/sampling.hpp"

#include <algorithm>

namespace lpr::rigidity {

using field::PrimeField;

Configuration<PrimeField::Elem> sample_configuration(const PrimeField& f, std::size_t n,
                                                     std::size_t d, Rng& rng) {
  Configuration<PrimeField::Elem> c(n, d, std::vector<PrimeField::Elem>(n * d, 0));
  std::vector<PrimeField::Elem> axis(n);
  for (std::size_t k = 0; k < d; ++k) {
    while (true) {
      for (std::size_t i = 0; i < n; ++i) axis[i] = f.sample(rng);
      auto sorted = axis;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
    }
    for (std::size_t i = 0; i < n; ++i) c.at(i, k) = axis[i];
  }
  return c;
}

namespace {

std::size_t rank_at_random_configuration(const graphs::Graph& g, std::size_t d, PExponent p,
                                         const PrimeField& f, Rng& rng) {
  const auto c = sample_configuration(f, g.vertex_count(), d, rng);
  return field::rank(f, rigidity_matrix(f, g, c, p));
}

}  // namespace

LocalRigidityResult generic_local_rigidity(const graphs::Graph& g, std::size_t d, PExponent p,
                                           std::size_t trials, std::uint64_t seed,
                                           const PrimeField& f) {
  if (g.vertex_count() < 1) throw Error("graph must have at least one vertex");
  if (trials < 1) throw Error("at least one trial is required");

  LocalRigidityResult result;
  result.target = d * g.vertex_count() - d;

  std::vector<std::size_t> ranks;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    ranks.push_back(rank_at_random_configuration(g, d, p, f, rng));
  }
  const auto [lo, hi] = std::minmax_element(ranks.begin(), ranks.end());
  if (*lo != *hi) {
    // Disagreeing trials mean at least one sample was non-generic; resample
    // once with a derived seed.
    result.reseeded = true;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(derive_seed(seed, 0x7e5eed), t));
      ranks.push_back(rank_at_random_configuration(g, d, p, f, rng));
    }
  }
  result.rank = *std::max_element(ranks.begin(), ranks.end());
  result.rigid = result.rank == result.target;
  return result;
}

StressConditionReport stress_condition_report(const graphs::Graph& g, std::size_t d, PExponent p,
                                              std::size_t trials, std::uint64_t seed,
                                              const PrimeField& f) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw Error("stress condition report requires at least three vertices");
  if (trials < 1) throw Error("at least one trial is required");

  StressConditionReport report;
  std::vector<std::size_t> per_axis(d, 0);
  bool found_stress = false;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, 0xc0de + t));
    const auto c = sample_configuration(f, n, d, rng);
    const auto basis = field::left_kernel_basis(f, rigidity_matrix(f, g, c, p));
    if (basis.empty()) continue;
    found_stress = true;
    const auto w = random_stress_combination(f, basis, rng);
    const auto ranks = per_axis_laplacian_ranks(f, g, c, w, p);
    for (std::size_t k = 0; k < d; ++k) {
      require(ranks[k] <= n - 2, "coordinated Laplacian rank exceeds n - 2");
      per_axis[k] = std::max(per_axis[k], ranks[k]);
    }
  }
  if (!found_stress) {
    report.no_stress = true;
    return report;
  }
  report.per_axis_rank = per_axis;
  report.some_k = std::any_of(per_axis.begin(), per_axis.end(),
                              [&](std::size_t r) { return r == n - 2; });
  report.all_k = std::all_of(per_axis.begin(), per_axis.end(),
                             [&](std::size_t r) { return r == n - 2; });
  return report;
}

}  // namespace lpr::rigidity
