#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "lpr/errors.hpp"
#include "lpr/rng.hpp"

namespace lpr::field {

// Exact rational scalar.  GMP keeps values canonical (reduced, positive
// denominator) after every operation we perform through mpq_class.
using Rat = mpq_class;

// Field object for exact rational arithmetic.  All linear algebra is
// parameterised over a field object so the same routines run over Q and
// over a prime field.
struct RationalField {
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long v) const { return Rat(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }

  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw DivisionByZero("rational inverse of zero");
    return Rat(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  // Random integer coefficient; plenty of entropy for generic linear
  // combinations in certificate mode.
  Elem sample(Rng& rng) const {
    return Rat(static_cast<long>(rng.below(2000001)) - 1000000);
  }

  std::string name() const { return "rational"; }
};

// a^e for integer e (negative allowed; base 0 with e < 0 throws).
Rat rat_pow(const Rat& base, long e);

// Parses "num", "-num" or "num/den" into a canonical rational.
Rat parse_rational(std::string_view text);

// Canonical "num" or "num/den" form, matching parse_rational.
std::string to_string(const Rat& value);

}  // namespace lpr::field
