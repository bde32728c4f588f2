#pragma once

#include <stdexcept>
#include <string>

namespace wsbvp {

/// Argument outside the interval a basis function or problem is defined on.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Evaluation of the differential operator at the singular point t = 0.
class SingularPointError : public DomainError {
public:
  using DomainError::DomainError;
};

class InvalidBoundaryCondition : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidManufactured : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the dense LU when a pivot falls below the relative threshold.
class SingularMatrixError : public std::runtime_error {
public:
  SingularMatrixError(const std::string &what, int iteration = -1)
      : std::runtime_error(iteration >= 0 ? what + " (iteration " + std::to_string(iteration) + ")"
                                          : what),
        iteration_(iteration) {}

  int iteration() const noexcept { return iteration_; }

private:
  int iteration_;
};

} // namespace wsbvp
