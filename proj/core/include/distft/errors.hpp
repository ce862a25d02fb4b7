#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distft {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adding scalars with unlike pi powers or unlike radical parts.
struct PowerMismatchError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct UnknownNameError : Error {
  using Error::Error;
};

// Term kind has no entry in the requested transform direction.
struct UnsupportedTermError : Error {
  using Error::Error;
};

// k-side expression matches no image of the forward table.
struct NonInvertibleError : Error {
  using Error::Error;
};

// Multiplying the term's transform by (ik)^alpha leaves the taxonomy.
struct FractionalOperandError : Error {
  using Error::Error;
};

struct UnsupportedAlphaError : Error {
  using Error::Error;
};

struct SingularPointError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  long long evaluations;
  ConvergenceError(const std::string& what, long long evals)
      : Error(what), evaluations(evals) {}
};

struct ParseError : Error {
  std::size_t offset;
  std::string expected;
  ParseError(const std::string& what, std::size_t off, std::string exp)
      : Error(what), offset(off), expected(std::move(exp)) {}
};

}  // namespace distft
