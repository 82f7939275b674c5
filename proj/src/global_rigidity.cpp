#include "lpr/global_rigidity.hpp"

namespace lpr::global_rigidity {

bool global_rigidity_1d(const graphs::Graph& g) {
  if (g.vertex_count() < 2) throw Error("global rigidity needs at least two vertices");
  if (g.vertex_count() == 2) return g.edge_count() == 1;  // K2
  return graphs::is_two_connected(g);
}

namespace {

void run_algebraic(Verdict& verdict, const graphs::Graph& g, rigidity::PExponent p,
                   std::uint64_t seed, const field::PrimeField& f) {
  const auto report = rigidity::stress_condition_report(g, 2, p, rigidity::kDefaultTrials, seed, f);
  verdict.algebraic_some_k = report.some_k;
  verdict.algebraic_all_k = report.all_k;
  verdict.per_axis_rank = report.per_axis_rank;
  verdict.no_stress = report.no_stress;
}

}  // namespace

Verdict global_rigidity_plane(const graphs::Graph& g, rigidity::PExponent p, PlaneMode mode,
                              std::uint64_t seed, const field::PrimeField& f) {
  if (g.vertex_count() < 3) throw Error("plane global rigidity needs at least three vertices");
  Verdict verdict;
  verdict.d = 2;
  verdict.p = p.value();
  verdict.seed = seed;

  if (mode != PlaneMode::Algebraic) {
    const bool two_conn = graphs::is_two_connected(g);
    const bool redundant = two_conn && graphs::is_redundantly_two_tree_connected(g);
    verdict.combinatorial = two_conn && redundant;
    if (*verdict.combinatorial) verdict.tree_pair = graphs::two_edge_disjoint_spanning_trees(g);
  }
  if (mode != PlaneMode::Combinatorial) run_algebraic(verdict, g, p, seed, f);

  if (mode == PlaneMode::Both && *verdict.combinatorial != *verdict.algebraic_all_k) {
    verdict.reseeded = true;
    run_algebraic(verdict, g, p, derive_seed(seed, 0xa17e), f);
    if (*verdict.combinatorial != *verdict.algebraic_all_k) throw CrossCheckMismatchError(verdict);
  }
  return verdict;
}

SufficiencyResult global_rigidity_sufficiency_general_d(const graphs::Graph& g, std::size_t d,
                                                        rigidity::PExponent p, std::uint64_t seed,
                                                        const field::PrimeField& f) {
  if (g.vertex_count() < 3) throw Error("sufficiency test needs at least three vertices");
  SufficiencyResult out;

  const auto report = rigidity::stress_condition_report(g, d, p, rigidity::kDefaultTrials, seed, f);
  out.suff_stress = report.all_k;
  out.per_axis_rank = report.per_axis_rank;

  out.local_d_plus_1 = rigidity::generic_local_rigidity(g, d + 1, p, rigidity::kDefaultTrials,
                                                        derive_seed(seed, 0xd1), f);
  out.suff_local_d_plus_1 = graphs::is_two_connected(g) && out.local_d_plus_1.rigid;
  return out;
}

}  // namespace lpr::global_rigidity
