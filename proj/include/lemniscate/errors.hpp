#pragma once

#include <stdexcept>
#include <string>

namespace lemniscate {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain an operation accepts (non-finite input,
// argument beyond a disc radius, out-of-range parameter).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative computation (quadrature refinement) ran out of budget.
class ComputationError : public Error {
 public:
  ComputationError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// The integration contour meets the cut of the principal square root.
class BranchError : public Error {
 public:
  using Error::Error;
};

// A duplication denominator vanished away from every known singularity.
// This indicates a defect in the evaluator, not a property of the input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lemniscate
