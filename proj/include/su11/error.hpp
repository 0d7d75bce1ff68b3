#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

// Input outside an operation's domain (k <= 0, |z| >= 1, odd symplectic
// dimension, ...). The CLI maps this to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative computation did not reach its tolerance. Carries the best
// value obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial)
      : std::runtime_error(what), partial_(partial) {}
  double partial() const noexcept { return partial_; }

 private:
  double partial_;
};

// A callback exhausted its evaluation budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace su11
