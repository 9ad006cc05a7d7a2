#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ca {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raw input is not a valid group table / table file. `code` is a stable
// machine-readable tag (NotLatinSquare, NoIdentityAtZero, NotAssociative,
// MissingInverse, ...); the message names the first offending cell or triple.
class ValidationError : public Error {
public:
  ValidationError(std::string code, const std::string& detail)
      : Error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Well-formed input that violates an operation's precondition
// (NotNormal, NotAPGroup, SameOrbit, NotDedekind, ...).
class PreconditionError : public Error {
public:
  PreconditionError(std::string code, const std::string& detail)
      : Error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// A malformed group descriptor string. Kept distinct from ValidationError so
// the CLI can map it to a usage error.
class DescriptorError : public Error {
public:
  using Error::Error;
};

// The request would exceed an enumeration cap.
class LimitError : public Error {
public:
  using Error::Error;
};

// Monoid closure hit its cap; carries the number of elements found so far.
class CapExceededError : public LimitError {
public:
  CapExceededError(std::size_t partial, std::size_t cap)
      : LimitError("CapExceeded: closure reached " + std::to_string(partial) +
                   " elements at cap " + std::to_string(cap)),
        partial_(partial) {}
  std::size_t partial_size() const { return partial_; }

private:
  std::size_t partial_;
};

}  // namespace ca
