#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed (integration, linear solve, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Ermakov-Pinney amplitude collapsed towards zero.
class SingularityError : public NumericalError {
 public:
  SingularityError(const std::string& what, double time)
      : NumericalError(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Adaptive step size underflowed.
class StiffnessError : public NumericalError {
 public:
  StiffnessError(const std::string& what, double time)
      : NumericalError(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Inconsistent or unusable configuration (grids, run files, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dunkl
