#ifndef LANDAU_ERRORS_HPP
#define LANDAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace landau {

/// Invalid arguments: non-finite inputs, violated parameter ranges.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter outside the range where a result is defined (e.g. Z*alpha >= 1).
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// A Sturm-Liouville coefficient that must be positive was not.
class CoefficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative refinement (domain growth, grid refinement, root finding) did
/// not settle. Carries the last two iterates.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double previous, double last)
      : std::runtime_error(what), previous_(previous), last_(last) {}

  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

/// Quadrature or root bracketing failed.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace landau

#endif  // LANDAU_ERRORS_HPP
