#pragma once

#include <cstddef>

namespace su11 {

// A real number stored as sign * exp(log_abs). sign == 0 encodes an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
  SignedLog operator*(const SignedLog& o) const { return {log_abs + o.log_abs, sign * o.sign}; }
  SignedLog operator/(const SignedLog& o) const { return {log_abs - o.log_abs, sign * o.sign}; }
};

// Gamma(x) in log space with its sign. Poles (x a nonpositive integer) throw.
SignedLog log_gamma(double x);

// 1/Gamma(x); exact zero at the poles.
SignedLog log_reciprocal_gamma(double x);

// Gamma(a + n) / Gamma(a), the rising factorial (a)_n.
SignedLog log_rising_factorial(double a, std::size_t n);

// Gamma(x + 1) / Gamma(x + 1 - r) = x (x-1) ... (x-r+1), the falling factorial.
// Vanishes exactly when one of the factors is zero.
SignedLog log_falling_factorial(double x, std::size_t r);

// log of the ladder normalisation Gamma(2k + m) / (m! Gamma(2k)).
double log_ladder_weight(double k, std::size_t m);

}  // namespace su11
