#include <doctest.h>

#include <cmath>
#include <numbers>

#include "su11/error.hpp"
#include "su11/special.hpp"

using namespace su11;

TEST_CASE("log_gamma tracks the sign on the negative axis") {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  CHECK(log_gamma(-0.5).value() == doctest::Approx(-2.0 * sqrt_pi).epsilon(1e-14));
  CHECK(log_gamma(-1.5).value() == doctest::Approx(4.0 * sqrt_pi / 3.0).epsilon(1e-14));
  CHECK(log_gamma(5.0).value() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(-2.0), DomainError);
}

TEST_CASE("reciprocal gamma vanishes exactly at the poles") {
  CHECK(log_reciprocal_gamma(0.0).sign == 0);
  CHECK(log_reciprocal_gamma(-3.0).value() == 0.0);
  CHECK(log_reciprocal_gamma(4.0).value() == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("falling factorial") {
  CHECK(log_falling_factorial(5.5, 2).value() == doctest::Approx(5.5 * 4.5).epsilon(1e-14));
  CHECK(log_falling_factorial(3.0, 0).value() == 1.0);
  // 3 * 2 * 1 * 0 * (-1)
  CHECK(log_falling_factorial(3.0, 5).sign == 0);
  CHECK(log_falling_factorial(3.0, 4).value() == 0.0);
  CHECK(log_falling_factorial(3.0, 3).value() == doctest::Approx(6.0).epsilon(1e-14));
  // 0.5 * (-0.5) * (-1.5)
  CHECK(log_falling_factorial(0.5, 3).value() == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("rising factorial with negative base") {
  CHECK(log_rising_factorial(-2.5, 3).value() == doctest::Approx(-1.875).epsilon(1e-14));
  CHECK(log_rising_factorial(2.0, 3).value() == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("ladder weight against exact integer ratios") {
  // k = 1: Gamma(2+m) / (m! Gamma(2)) = m + 1
  for (std::size_t m = 0; m < 20; ++m) {
    CHECK(std::exp(log_ladder_weight(1.0, m)) == doctest::Approx(double(m + 1)).epsilon(1e-13));
  }
  // k = 3/2: Gamma(3+m) / (m! Gamma(3)) = (m+1)(m+2)/2
  for (std::size_t m = 0; m < 20; ++m) {
    CHECK(std::exp(log_ladder_weight(1.5, m)) == doctest::Approx((m + 1.0) * (m + 2.0) / 2.0).epsilon(1e-13));
  }
  // Large arguments stay finite where Gamma itself overflows.
  CHECK(std::isfinite(log_ladder_weight(200.0, 300)));
}
