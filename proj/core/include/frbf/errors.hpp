#pragma once

#include <stdexcept>
#include <string>

namespace frbf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma evaluated at 0, -1, -2, ...
class PoleError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain where the formula is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Kernel parameters break the non-integrality or order restrictions.
class RestrictionError : public Error {
 public:
  using Error::Error;
};

class NoNegativeTermError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be inverted is singular for every attempted shift.
class SingularError : public SingularSystemError {
 public:
  using SingularSystemError::SingularSystemError;
};

/// The solve finished but the residual check failed.
class SolveError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DuplicateNodeError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// No shift exponent brought cond(G_M) under the target.
class NoShiftFoundError : public Error {
 public:
  NoShiftFoundError(const std::string& what, int best_n, double best_cond)
      : Error(what), best_n_(best_n), best_cond_(best_cond) {}

  int best_n() const noexcept { return best_n_; }
  double best_cond() const noexcept { return best_cond_; }

 private:
  int best_n_;
  double best_cond_;
};

}  // namespace frbf
