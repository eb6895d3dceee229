#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srf {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain (bad y, bad support, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when a computation could not be trusted at the available precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public PrecisionError {
 public:
  NotPositiveDefinite(std::size_t pivot, const std::string& what)
      : PrecisionError(what), pivot_(pivot) {}
  std::size_t pivot() const { return pivot_; }

 private:
  std::size_t pivot_;
};

class NoConvergence : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class SupportNotContained : public DomainError {
 public:
  using DomainError::DomainError;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class TieInThreshold : public Error {
 public:
  using Error::Error;
};

/// Point lies (numerically) on the arc where the exterior map is undefined.
class OnArcError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

class TruncationError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

}  // namespace srf
