#pragma once

#include <cstddef>
#include <vector>

namespace su11 {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

// Uniform periodic trapezoid rule on [0, 2*pi): n equally weighted nodes,
// exact for trigonometric polynomials of degree < n.
QuadratureRule periodic_trapezoid(std::size_t n);

}  // namespace su11
