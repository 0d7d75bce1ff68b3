#include "su11/special.hpp"

#include <cmath>
#include <limits>

#include "su11/error.hpp"

namespace su11 {

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

// Gamma is negative on (-2j-1, -2j) and positive elsewhere off the poles.
int gamma_sign(double x) {
  if (x > 0.0) return 1;
  const double cells = std::ceil(-x);
  return std::fmod(cells, 2.0) == 1.0 ? -1 : 1;
}

}  // namespace

SignedLog log_gamma(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("log_gamma: pole at nonpositive integer");
  return {std::lgamma(x), gamma_sign(x)};
}

SignedLog log_reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return {-std::numeric_limits<double>::infinity(), 0};
  const SignedLog g = log_gamma(x);
  return {-g.log_abs, g.sign};
}

SignedLog log_rising_factorial(double a, std::size_t n) {
  if (n == 0) return {0.0, 1};
  if (a > 0.0) return {std::lgamma(a + static_cast<double>(n)) - std::lgamma(a), 1};
  SignedLog acc{0.0, 1};
  for (std::size_t j = 0; j < n; ++j) {
    const double f = a + static_cast<double>(j);
    if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    acc.log_abs += std::log(std::fabs(f));
    if (f < 0.0) acc.sign = -acc.sign;
  }
  return acc;
}

SignedLog log_falling_factorial(double x, std::size_t r) {
  if (r == 0) return {0.0, 1};
  const double lowest = x - static_cast<double>(r) + 1.0;
  if (lowest > 0.0) return {std::lgamma(x + 1.0) - std::lgamma(lowest), 1};
  return log_rising_factorial(lowest, r);
}

double log_ladder_weight(double k, std::size_t m) {
  const double md = static_cast<double>(m);
  return std::lgamma(2.0 * k + md) - std::lgamma(md + 1.0) - std::lgamma(2.0 * k);
}

}  // namespace su11
