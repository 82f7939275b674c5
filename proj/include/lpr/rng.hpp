#pragma once

#include <cstdint>
#include <random>

namespace lpr {

// Deterministic random source.  mt19937_64 is fully specified by the
// standard and rejection sampling avoids distribution objects, so streams
// are bit-identical across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform value in [0, n).  n = 0 returns 0.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  bool coin() { return next() >> 63; }

 private:
  std::mt19937_64 eng_;
};

// Stable seed derivation for independent sub-streams (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace lpr
