#pragma once

#include <stdexcept>
#include <string>

namespace toa {

/// Input outside the mathematical domain of an operation (p = 0, |z| >= 1 for
/// a divergent pFq, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or extrapolation did not settle within its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series or kernel does not have the shape an operation requires.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-finite value produced by a user-supplied integrand.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toa
