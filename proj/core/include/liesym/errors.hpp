#pragma once

#include <stdexcept>
#include <string>

namespace liesym {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NotACocycle : Error {
  using Error::Error;
};

// A sampled group-cocycle identity failed; the message carries the witness.
struct CocycleViolation : Error {
  using Error::Error;
};

struct UnknownGroup : Error {
  using Error::Error;
};

struct BadParams : Error {
  using Error::Error;
};

struct ZeroVector : Error {
  using Error::Error;
};

struct BadDimension : Error {
  using Error::Error;
};

struct NotScalar : Error {
  using Error::Error;
};

struct NotSU2 : Error {
  using Error::Error;
};

struct LiftFailure : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace liesym
