#pragma once

#include <stdexcept>
#include <string>

namespace gradpade {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments supplied by a caller (bad radius, negative density, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (density tables, basis files).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its target.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature gave up; carries the best estimate it had.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : NumericalError(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double achieved_error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Integrand or density returned a non-finite value.
class NonFiniteError : public NumericalError {
 public:
  NonFiniteError(const std::string& what, double radius)
      : NumericalError(what), radius_(radius) {}

  double radius() const noexcept { return radius_; }

 private:
  double radius_;
};

}  // namespace gradpade
