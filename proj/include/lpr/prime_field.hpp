#pragma once

#include <cstdint>
#include <string>

#include "lpr/errors.hpp"
#include "lpr/rng.hpp"

namespace lpr::field {

// Default modulus: the Mersenne prime 2^61 - 1.  Single-word arithmetic,
// and large enough that Schwartz-Zippel failures are negligible at the
// matrix sizes this library handles.
inline constexpr std::uint64_t kDefaultModulus = (1ULL << 61) - 1;

// Smallest modulus accepted for randomized rank certification.
inline constexpr std::uint64_t kMinModulus = 1ULL << 50;

bool is_prime_u64(std::uint64_t n);

// Arithmetic in Z/qZ for a prime q >= 2^50.  Elements are plain uint64_t
// values in [0, q); all operations go through the field object.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(q_);
    if (r < 0) r += static_cast<long>(q_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;  // q < 2^63 so no overflow
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % q_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZero("prime-field inverse of zero");
    return pow(a, q_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem sample(Rng& rng) const { return rng.below(q_); }
  Elem sample_nonzero(Rng& rng) const { return 1 + rng.below(q_ - 1); }

  std::string name() const { return "prime:" + std::to_string(q_); }

 private:
  std::uint64_t q_;
};

}  // namespace lpr::field
