#pragma once

#include <optional>

#include "lpr/connectivity.hpp"
#include "lpr/sampling.hpp"
#include "lpr/tree_packing.hpp"

namespace lpr::global_rigidity {

enum class PlaneMode { Combinatorial, Algebraic, Both };

// Decision record for one graph.  Every positive verdict is backed by a
// replayable certificate (witness trees or coordinated-Laplacian ranks with
// the seed that produced them).
struct Verdict {
  std::size_t d = 2;
  int p = 4;
  std::uint64_t seed = 0;
  std::optional<bool> combinatorial;
  std::optional<bool> algebraic_some_k;
  std::optional<bool> algebraic_all_k;
  std::optional<bool> suff_via_d_plus_1;
  std::optional<graphs::TreePair> tree_pair;
  std::vector<std::size_t> per_axis_rank;
  bool no_stress = false;
  bool reseeded = false;
};

// Raised when the combinatorial and algebraic routes disagree even after a
// reseed: either a (vanishingly rare) Schwartz-Zippel failure or a bug.
struct CrossCheckMismatchError : Error {
  explicit CrossCheckMismatchError(Verdict v)
      : Error("combinatorial and algebraic global-rigidity verdicts disagree"),
        verdict(std::move(v)) {}
  Verdict verdict;
};

// One-dimensional case: generic frameworks of g are globally rigid iff g is
// 2-connected (or g = K2).
bool global_rigidity_1d(const graphs::Graph& g);

// Plane decision.  The combinatorial route tests 2-connectivity plus
// redundant 2-tree-connectivity; the algebraic route tests the coordinated
// self-stress Laplacian rank condition on generic samples.  Mode Both
// cross-checks the two and throws CrossCheckMismatchError if they disagree
// after one reseed.
Verdict global_rigidity_plane(const graphs::Graph& g, rigidity::PExponent p, PlaneMode mode,
                              std::uint64_t seed,
                              const field::PrimeField& f = field::PrimeField());

struct SufficiencyResult {
  bool suff_stress = false;           // coordinated-stress rank n-2 for all axes
  bool suff_local_d_plus_1 = false;   // 2-connected and locally rigid in d+1
  std::vector<std::size_t> per_axis_rank;
  rigidity::LocalRigidityResult local_d_plus_1;
};

// Sufficient conditions for global rigidity in dimension d >= 1.  Either
// flag true certifies global rigidity; both false is inconclusive for
// d >= 3 (no proven characterisation exists there).
SufficiencyResult global_rigidity_sufficiency_general_d(
    const graphs::Graph& g, std::size_t d, rigidity::PExponent p, std::uint64_t seed,
    const field::PrimeField& f = field::PrimeField());

}  // namespace lpr::global_rigidity
