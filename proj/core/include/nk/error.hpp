#ifndef NK_ERROR_HPP
#define NK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nk {

// Base of every error thrown by the library. The CLI maps DomainError and
// its subclasses to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a point where the formula is singular (e.g. 0 raised to a
// negative power).
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Root finding or quadrature failed to reach the requested tolerance.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  explicit NumericalError(const std::string& what) : NumericalError(what, 0.0) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Two independent routes to the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A caller-asserted property of an input (e.g. convexity) does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nk

#endif  // NK_ERROR_HPP
