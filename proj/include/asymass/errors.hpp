#pragma once

#include <stdexcept>
#include <string>

namespace asymass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The metric matrix could not be inverted at the requested point.
class SingularMetricError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the domain of an operation (off a surface, outside
/// the exterior chart, reflected out of the chart, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A differentiation backend could not produce the requested derivatives.
class DifferentiationError : public Error {
 public:
  using Error::Error;
};

/// An integrand returned a non-finite value at a quadrature node.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Too few samples to extrapolate.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Center of mass requested for a manifold whose mass vanishes.
class DegenerateMassError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration, unknown catalog entry or parameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A metric specification violates the decay/admission conditions.
class AdmissionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace asymass
