#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "su11/linalg.hpp"

namespace su11 {

// Atomic units throughout.
struct QuantumNumbers {
  double Z = 1.0;
  int l = 0;
  int m = 0;  // radial ladder index
  QuantumNumbers(double Z, int l, int m);
  int n() const { return m + l + 1; }
};

// E_n = -Z^2 / (2 n^2).
double energy_level(const QuantumNumbers& qn);
// -Z / (2 n^2), the alternative closed form; equal to energy_level only for Z = 1.
double printed_energy_level(const QuantumNumbers& qn);

// tanh(theta) = (64E + 1/2) / (64E - 1/2), which with Y~ = exp(-i theta K2) Y
// turns (1/2 - 64E) K0 + (1/2 + 64E) K1 into sqrt(-128 E) K0.
struct TiltChain {
  double ratio = 0.0;
  double theta = 0.0;
  double scale = 0.0;          // sqrt((1/2 - 64E)^2 - (1/2 + 64E)^2) = 8 sqrt(-2E)
  double k0_eigenvalue = 0.0;  // 8Z / scale = Z / sqrt(-2E)
  double chain_residual = 0.0; // |scale (cosh, -sinh)(theta) - (1/2 - 64E, 1/2 + 64E)|
};

// Throws DomainError for E >= 0 and when the ratio is not strictly inside (-1, 1)
// in floating point (theta would be infinite).
double tilt_angle(double E);
TiltChain tilt_chain(double Z, double E);

// Z / sqrt(-2E).
double k0_eigenvalue(double Z, double E);

// Uniform grid y_min, ..., y_max.
struct YGrid {
  double y_min = 0.5;
  double y_max = 10.0;
  std::size_t points = 4000;
  YGrid(double y_min, double y_max, std::size_t points);
  double spacing() const { return (y_max - y_min) / static_cast<double>(points - 1); }
  double at(std::size_t i) const { return y_min + static_cast<double>(i) * spacing(); }
};

// K1 = D + y^2/16, K0 = D - y^2/16 with D = d^2/dy^2 + a/y^2, and
// K2 = -(i/2)(y d/dy + 1/2), discretised by central differences.
struct DifferentialRealization {
  double a = 0.0;
  YGrid grid;
};

namespace fd {
// Central differences of grid samples; entries within `order / 2` of either
// end are left at zero. order is 2 or 4.
CVector first_derivative(const CVector& f, double h, int order = 2);
CVector second_derivative(const CVector& f, double h, int order = 2);
}  // namespace fd

enum class YOperator { K0, K1, K2 };
CVector apply(const DifferentialRealization& r, YOperator op, const CVector& f, int order = 2);

using TestFunction = std::function<double(double)>;

struct CommutatorReport {
  // [K1,K2] + i K0, [K0,K1] - i K2, [K2,K0] - i K1 and [K2, K0 - K1] - i y^2/8,
  // max over interior points and test functions.
  double k1k2 = 0.0;
  double k0k1 = 0.0;
  double k2k0 = 0.0;
  double k2_k0_minus_k1 = 0.0;
  double max() const;
};

struct DifferentialCommutatorResult {
  CommutatorReport raw;         // on the requested grid
  CommutatorReport coarse;      // on every other point (spacing 2h)
  CommutatorReport richardson;  // (4 raw - coarse) / 3 pointwise on shared points
};

// Throws DomainError when a test function is not negligible (relative 1e-8) on
// the outer stencil points.
DifferentialCommutatorResult differential_commutator_residual(double a, const YGrid& grid,
                                                              const std::vector<TestFunction>& tests);

struct RadialReductionResult {
  double residual = 0.0;              // transformed equation, attractive Coulomb term
  double operator_residual = 0.0;     // same through (1/2-64E) K0 + (1/2+64E) K1 + 8Z
  double printed_residual = 0.0;      // sign variant: a = 3/4 - 4l(l+1) and -8Z
  double a_used = 0.0;                // -4l(l+1) - 3/4
  double a_printed = 0.0;             // 3/4 - 4l(l+1)
  double a_fitted = 0.0;              // least squares coefficient of Y / y^2
  double z_coefficient_fitted = 0.0;  // least squares coefficient of Y (8Z attractive)
  double combination_identity = 0.0;  // (1/2-64E) + (1/2+64E) - 1
  double y2_coefficient = 0.0;        // ((1/2+64E) - (1/2-64E)) / 16, equal to 8E
};

// Samples Y(y) = y^(3/2) R(y^2) for the nodeless state R = r^l exp(-Z r/(l+1))
// and evaluates Y'' + a/y^2 Y + 8E y^2 Y + 8Z Y with fourth-order differences.
RadialReductionResult radial_reduction_check(double Z, int l, double E, const YGrid& grid);

struct RadialGrid {
  double r_min = 1e-5;
  double r_max = 60.0;
  std::size_t points = 3000;
  RadialGrid(double r_min, double r_max, std::size_t points);
};

struct FdSpectrum {
  std::vector<double> eigenvalues;  // lowest `count`, ascending
  std::vector<double> refined;      // same on the grid with halved spacing
  double movement = 0.0;            // max |eigenvalues - refined|
};

// -u''/2 + (l(l+1)/(2r^2) - Z/r) u = E u with u = rR, Dirichlet ends.
// Throws ConvergenceError when refinement moves an eigenvalue by more than refine_tol.
FdSpectrum radial_fd_spectrum(double Z, int l, const RadialGrid& grid, std::size_t count, double refine_tol = 1e-3);

}  // namespace su11
