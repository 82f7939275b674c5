#pragma once

#include <cstdint>
#include <vector>

#include "lpr/prime_field.hpp"
#include "lpr/rigidity.hpp"

namespace lpr::experiments {

// Hitting times of one G(n, M) edge-addition process.
struct HittingTimes {
  std::size_t n = 0;
  std::size_t d = 0;
  int p = 4;
  std::uint64_t seed = 0;
  std::size_t m_min_degree_d = 0;         // M_d
  std::size_t m_min_degree_d_plus_1 = 0;  // M_{d+1}
  std::size_t m_local_rigid = 0;          // M_LR
  std::size_t m_global_rigid = 0;         // M_GR
  bool gr_is_upper_bound = false;         // d >= 3 tracks a sufficient condition only
};

// Simulates one uniform edge-addition process and records when minimum
// degree d / d+1, local rigidity (randomized rank test with a confirmation
// trial at the hitting point) and global rigidity are first reached.
// Global rigidity uses the exact combinatorial test for d <= 2 and the
// 2-connected + locally-rigid-in-(d+1) sufficient condition for d >= 3.
HittingTimes er_hitting_times(std::size_t n, std::size_t d, rigidity::PExponent p,
                              std::uint64_t seed,
                              const field::PrimeField& f = field::PrimeField());

struct ThresholdRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  double freq_lr_eq_min_degree = 0.0;  // fraction of trials with M_LR = M_d
  double freq_gr_eq_min_degree = 0.0;  // fraction of trials with M_GR = M_{d+1}
  double mean_gap_lr = 0.0;            // mean of M_LR - M_d
  double mean_gap_gr = 0.0;            // mean of M_GR - M_{d+1}
};

std::vector<ThresholdRow> threshold_report(const std::vector<std::size_t>& n_list, std::size_t d,
                                           rigidity::PExponent p, std::size_t trials,
                                           std::uint64_t seed,
                                           const field::PrimeField& f = field::PrimeField());

}  // namespace lpr::experiments
