#pragma once

#include <stdexcept>
#include <string>

namespace lwave {

/// Base for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: a physical constraint, an argument range, or a grid shape was
/// violated. The CLI maps this family to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ArgumentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GeometryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GridError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A computation ran but could not deliver a trustworthy number.
/// The CLI maps this family to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class RangeError : public NumericalError {
 public:
  RangeError(const std::string& what, double magnitude)
      : NumericalError(what), magnitude_(magnitude) {}
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Non-finite integrand or field sample; carries the offending location.
class EvaluationError : public NumericalError {
 public:
  EvaluationError(const std::string& what, double location)
      : NumericalError(what), location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

class ToleranceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IntegrationDomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A profile measurement (width, depth, peak) could not be made reliably.
class MeasurementError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace lwave
