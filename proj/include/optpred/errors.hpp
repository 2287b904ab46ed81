#pragma once

#include <stdexcept>
#include <string>

namespace optpred {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation
/// (degree above the cap, a <= 0 where a > 0 is required, z0 on [-1,1], ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed input: unsorted nodes, negative weights, length mismatches.
class InputError : public Error {
public:
  using Error::Error;
};

/// A Gram or design matrix could not be factored.
class RankDeficiencyError : public Error {
public:
  using Error::Error;
};

/// Bisection bracket without a sign change.
class BracketError : public Error {
public:
  BracketError(std::size_t index, const std::string& what)
    : Error(what), index_(index) {}

  std::size_t bracket_index() const noexcept { return index_; }

private:
  std::size_t index_;
};

} // namespace optpred
