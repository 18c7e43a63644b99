#pragma once

#include <stdexcept>
#include <string>

namespace gaussbound {

/// Base class for all gaussbound errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate geometry (affinely dependent vertices, bad dimensions).
class GeometryError : public Error {
 public:
  GeometryError(const std::string& what, int rank = -1) : Error(what), rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

/// A linear solve could not be completed reliably. Carries the condition
/// estimate when one is available (infinity when the matrix looked singular).
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double condition_estimate)
      : Error(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// delta outside (0, delta0]; carries the admissibility threshold.
class AdmissibilityError : public Error {
 public:
  AdmissibilityError(const std::string& what, double delta, double delta0)
      : Error(what), delta_(delta), delta0_(delta0) {}
  double delta() const { return delta_; }
  double delta0() const { return delta0_; }

 private:
  double delta_;
  double delta0_;
};

/// Invalid configuration file or CLI arguments.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic would overflow the requested fixed-width result.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussbound
