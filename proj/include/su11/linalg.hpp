#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "su11/error.hpp"

namespace su11 {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Largest |entry|; zero for an empty matrix.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  using std::abs;
  return static_cast<double>(m.cwiseAbs().maxCoeff());
}

// Largest |entry| of the leading rows x rows block.
template <class Derived>
double block_max_abs(const Eigen::MatrixBase<Derived>& m, std::size_t rows) {
  const auto n = static_cast<Eigen::Index>(std::min<std::size_t>(rows, m.rows()));
  if (n == 0) return 0.0;
  return max_abs(m.topLeftCorner(n, n));
}

struct ExpmOptions {
  // Evaluate both the degree-9 and degree-13 Pade approximants and require
  // them to agree to `tolerance` (relative to the result's max entry).
  bool check_orders = true;
  double tolerance = 1e-10;
};

template <class Matrix>
struct ExpmResult {
  Matrix value;
  int squarings = 0;
  double order_discrepancy = 0.0;
};

namespace detail {

// Coefficients of the [m/m] Pade approximant of exp,
// b_j = (2m - j)! m! / ((2m)! j! (m - j)!), by the ratio recursion in the
// working precision.
template <class Real>
std::vector<Real> pade_coefficients(int m) {
  std::vector<Real> b(m + 1);
  b[0] = Real(1);
  for (int j = 1; j <= m; ++j) b[j] = b[j - 1] * Real(m - j + 1) / Real(j * (2 * m - j + 1));
  return b;
}

// Largest 1-norm for which the [m/m] approximant error bound
// (m!)^2 / ((2m)! (2m+1)!) * x^(2m+1) stays below the unit roundoff.
inline double pade_threshold(int m, double unit_roundoff) {
  const double log_c = 2.0 * std::lgamma(m + 1.0) - std::lgamma(2.0 * m + 1) - std::lgamma(2.0 * m + 2);
  return std::exp((std::log(unit_roundoff) - log_c) / (2.0 * m + 1));
}

template <class Matrix>
Matrix pade_exp(const Matrix& a, int m) {
  using Scalar = typename Matrix::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const std::vector<Real> b = pade_coefficients<Real>(m);
  const Eigen::Index n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  // Even powers A^0, A^2, ..., A^(2*floor(m/2)).
  std::vector<Matrix> even{id, a2};
  while (static_cast<int>(2 * even.size()) <= m) even.push_back(even.back() * a2);
  Matrix u_inner = Matrix::Zero(n, n);
  Matrix v = Matrix::Zero(n, n);
  for (int j = 0; j <= m; ++j) {
    const Scalar c = Scalar(b[j]);
    if (j % 2 == 0) {
      v += c * even[j / 2];
    } else {
      u_inner += c * even[(j - 1) / 2];
    }
  }
  const Matrix u = a * u_inner;
  return Eigen::PartialPivLU<Matrix>(v - u).solve(v + u);
}

}  // namespace detail

// Matrix exponential by scaling and squaring around Pade approximants.
// The scaling threshold adapts to the precision of the scalar type.
template <class Derived>
auto expm(const Eigen::MatrixBase<Derived>& a_in, ExpmOptions opts = {})
    -> ExpmResult<typename Derived::PlainObject> {
  using Matrix = typename Derived::PlainObject;
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (a_in.rows() != a_in.cols()) throw DomainError("expm: matrix must be square");

  const Matrix a = a_in;
  const double unit = static_cast<double>(std::numeric_limits<Real>::epsilon()) / 2.0;
  const double norm = a.size() == 0 ? 0.0 : static_cast<double>(a.cwiseAbs().colwise().sum().maxCoeff());
  const double theta = detail::pade_threshold(opts.check_orders ? 9 : 13, unit);

  int s = 0;
  if (norm > theta) s = static_cast<int>(std::ceil(std::log2(norm / theta)));
  const Matrix scaled = a / Real(std::ldexp(1.0, s));

  ExpmResult<Matrix> out;
  out.squarings = s;
  out.value = detail::pade_exp(scaled, 13);
  Matrix low;
  if (opts.check_orders) low = detail::pade_exp(scaled, 9);
  for (int i = 0; i < s; ++i) {
    out.value = (out.value * out.value).eval();
    if (opts.check_orders) low = (low * low).eval();
  }
  if (opts.check_orders) {
    const double scale = std::max(1.0, max_abs(out.value));
    out.order_discrepancy = max_abs(out.value - low) / scale;
    if (!(out.order_discrepancy <= opts.tolerance)) {
      throw ConvergenceError("expm: degree-9 and degree-13 approximants disagree", out.order_discrepancy);
    }
  }
  return out;
}

// Lowest `count` eigenvalues (ascending) of the symmetric tridiagonal matrix
// with the given diagonal and off-diagonal, by Sturm-sequence bisection.
std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diag,
                                                   std::span<const double> offdiag, std::size_t count,
                                                   double abs_tol = 1e-13);

}  // namespace su11
