#pragma once

#include <stdexcept>
#include <string>

namespace lpr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct SingularBlock : Error {
  using Error::Error;
};

struct NoStress : Error {
  using Error::Error;
};

struct EdgeNotFound : Error {
  using Error::Error;
};

struct InvalidSplit : Error {
  using Error::Error;
};

struct ZeroStressOnEdge : Error {
  using Error::Error;
};

// Raised by the framework-transfer constructions when the chosen edge has
// equal coordinates on some axis, which breaks the rank argument.
struct DegenerateEdge : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A postcondition that is guaranteed by construction failed at runtime.
struct InvariantViolation : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantViolation(msg);
}

}  // namespace lpr
