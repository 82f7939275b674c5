#pragma once

#include <cstdint>

#include "lpr/prime_field.hpp"
#include "lpr/rigidity.hpp"

namespace lpr::rigidity {

// Random prime-field configuration with pairwise-distinct coordinates on
// every axis (the operational stand-in for a generic framework).
Configuration<field::PrimeField::Elem> sample_configuration(const field::PrimeField& f,
                                                            std::size_t n, std::size_t d,
                                                            Rng& rng);

struct LocalRigidityResult {
  bool rigid = false;
  std::size_t rank = 0;
  std::size_t target = 0;  // d*n - d
  bool reseeded = false;
};

// Randomized generic local-rigidity test: the maximum observed rank of the
// rigidity matrix over `trials` random prime-field configurations.  Any
// rank equal to d*n - d certifies generic local rigidity; disagreeing
// trials trigger one automatic reseed.  Deterministic given the seed.
LocalRigidityResult generic_local_rigidity(const graphs::Graph& g, std::size_t d, PExponent p,
                                           std::size_t trials, std::uint64_t seed,
                                           const field::PrimeField& f = field::PrimeField());

struct StressConditionReport {
  std::vector<std::size_t> per_axis_rank;  // empty when no_stress
  bool some_k = false;
  bool all_k = false;
  bool no_stress = false;
};

// Samples a generic configuration and a generic self-stress per trial and
// reports, per axis k, the maximum observed rank of the Laplacian weighted
// by the k-th coordinated stress.  some_k / all_k compare against n - 2.
StressConditionReport stress_condition_report(const graphs::Graph& g, std::size_t d, PExponent p,
                                              std::size_t trials, std::uint64_t seed,
                                              const field::PrimeField& f = field::PrimeField());

inline constexpr std::size_t kDefaultTrials = 3;

}  // namespace lpr::rigidity
