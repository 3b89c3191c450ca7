#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apsheat {

/// Base class of everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: out-of-domain arguments, malformed files, violated
/// preconditions. The CLI maps these to exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation on valid input could not meet its contract. The CLI maps
/// these to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A root could not be bracketed. `index` is the 1-based index of the root
/// that was being searched for.
class BracketError : public NumericalError {
 public:
  BracketError(std::size_t index, const std::string& what)
      : NumericalError(what + " (root index " + std::to_string(index) + ")"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The spectrum is too short to certify the requested truncation tolerance.
class InsufficientModesError : public NumericalError {
 public:
  InsufficientModesError(std::size_t available, std::size_t required)
      : NumericalError("insufficient modes: have " + std::to_string(available) +
                       ", need at least " + std::to_string(required)),
        available_(available),
        required_(required) {}
  std::size_t available() const noexcept { return available_; }
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t available_;
  std::size_t required_;
};

class RankDeficientError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A series was asked for outside its abscissa of convergence.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A required input quantity was not supplied.
class MissingValueError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace apsheat
