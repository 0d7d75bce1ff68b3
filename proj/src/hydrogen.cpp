#include "su11/hydrogen.hpp"

#include <algorithm>
#include <cmath>

#include "su11/error.hpp"

namespace su11 {

QuantumNumbers::QuantumNumbers(double Z_, int l_, int m_) : Z(Z_), l(l_), m(m_) {
  if (!(Z > 0.0)) throw DomainError("nuclear charge must be positive");
  if (l < 0 || m < 0) throw DomainError("quantum numbers l and m must be nonnegative");
}

double energy_level(const QuantumNumbers& qn) {
  const double n = qn.n();
  return -qn.Z * qn.Z / (2.0 * n * n);
}

double printed_energy_level(const QuantumNumbers& qn) {
  const double n = qn.n();
  return -qn.Z / (2.0 * n * n);
}

double tilt_angle(double E) {
  if (!(E < 0.0)) throw DomainError("tilting requires a bound state, E < 0");
  const double ratio = (64.0 * E + 0.5) / (64.0 * E - 0.5);
  if (!(std::abs(ratio) < 1.0)) throw DomainError("tilt ratio reached +-1; theta is not finite");
  return std::atanh(ratio);
}

double k0_eigenvalue(double Z, double E) {
  if (!(E < 0.0)) throw DomainError("K0 eigenvalue requires E < 0");
  return Z / std::sqrt(-2.0 * E);
}

TiltChain tilt_chain(double Z, double E) {
  TiltChain c;
  c.theta = tilt_angle(E);
  c.ratio = std::tanh(c.theta);
  const double A = 0.5 - 64.0 * E, B = 0.5 + 64.0 * E;
  c.scale = std::sqrt((A - B) * (A + B));
  c.k0_eigenvalue = 8.0 * Z / c.scale;
  c.chain_residual =
      std::max(std::abs(c.scale * std::cosh(c.theta) - A), std::abs(-c.scale * std::sinh(c.theta) - B));
  return c;
}

YGrid::YGrid(double lo, double hi, std::size_t n) : y_min(lo), y_max(hi), points(n) {
  if (!(lo > 0.0)) throw DomainError("y grid must start at y_min > 0");
  if (!(hi > lo)) throw DomainError("y grid needs y_max > y_min");
  if (n < 9) throw DomainError("y grid needs at least 9 points");
}

namespace fd {

CVector first_derivative(const CVector& f, double h, int order) {
  const Eigen::Index n = f.size();
  CVector d = CVector::Zero(n);
  if (order == 2) {
    for (Eigen::Index i = 1; i + 1 < n; ++i) d(i) = (f(i + 1) - f(i - 1)) / (2.0 * h);
  } else {
    for (Eigen::Index i = 2; i + 2 < n; ++i)
      d(i) = (-f(i + 2) + 8.0 * f(i + 1) - 8.0 * f(i - 1) + f(i - 2)) / (12.0 * h);
  }
  return d;
}

CVector second_derivative(const CVector& f, double h, int order) {
  const Eigen::Index n = f.size();
  CVector d = CVector::Zero(n);
  if (order == 2) {
    for (Eigen::Index i = 1; i + 1 < n; ++i) d(i) = (f(i + 1) - 2.0 * f(i) + f(i - 1)) / (h * h);
  } else {
    for (Eigen::Index i = 2; i + 2 < n; ++i)
      d(i) = (-f(i + 2) + 16.0 * f(i + 1) - 30.0 * f(i) + 16.0 * f(i - 1) - f(i - 2)) / (12.0 * h * h);
  }
  return d;
}

}  // namespace fd

CVector apply(const DifferentialRealization& r, YOperator op, const CVector& f, int order) {
  const double h = r.grid.spacing();
  const Eigen::Index n = f.size();
  CVector out(n);
  if (op == YOperator::K2) {
    const CVector d = fd::first_derivative(f, h, order);
    for (Eigen::Index i = 0; i < n; ++i) {
      out(i) = std::complex<double>(0.0, -0.5) * (r.grid.at(static_cast<std::size_t>(i)) * d(i) + 0.5 * f(i));
    }
    return out;
  }
  const double sign = op == YOperator::K1 ? 1.0 : -1.0;
  const CVector d2 = fd::second_derivative(f, h, order);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double y = r.grid.at(static_cast<std::size_t>(i));
    out(i) = d2(i) + (r.a / (y * y) + sign * y * y / 16.0) * f(i);
  }
  return out;
}

double CommutatorReport::max() const { return std::max({k1k2, k0k1, k2k0, k2_k0_minus_k1}); }

namespace {

struct PointwiseResiduals {
  CVector k1k2, k0k1, k2k0, tilt;
};

PointwiseResiduals pointwise(const DifferentialRealization& r, const CVector& f) {
  const std::complex<double> i(0.0, 1.0);
  auto K = [&](YOperator op, const CVector& v) { return apply(r, op, v); };
  const CVector k0 = K(YOperator::K0, f), k1 = K(YOperator::K1, f), k2 = K(YOperator::K2, f);
  PointwiseResiduals p;
  p.k1k2 = K(YOperator::K1, k2) - K(YOperator::K2, k1) + i * k0;
  p.k0k1 = K(YOperator::K0, k1) - K(YOperator::K1, k0) - i * k2;
  p.k2k0 = K(YOperator::K2, k0) - K(YOperator::K0, k2) - i * k1;
  const CVector diff = k0 - k1;
  CVector y2f(f.size());
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    const double y = r.grid.at(static_cast<std::size_t>(j));
    y2f(j) = y * y / 8.0 * f(j);
  }
  p.tilt = K(YOperator::K2, diff) - K(YOperator::K0, k2) + K(YOperator::K1, k2) - i * y2f;
  return p;
}

// Max over indices [2, n-3], where two stacked three-point stencils are valid.
double interior_max(const CVector& v) {
  double worst = 0.0;
  for (Eigen::Index j = 2; j + 2 < v.size(); ++j) worst = std::max(worst, std::abs(v(j)));
  return worst;
}

CVector sample(const TestFunction& f, const YGrid& g, std::size_t stride = 1) {
  const std::size_t n = (g.points - 1) / stride + 1;
  CVector v(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) v(static_cast<Eigen::Index>(j)) = f(g.at(j * stride));
  return v;
}

void accumulate(CommutatorReport& rep, const PointwiseResiduals& p) {
  rep.k1k2 = std::max(rep.k1k2, interior_max(p.k1k2));
  rep.k0k1 = std::max(rep.k0k1, interior_max(p.k0k1));
  rep.k2k0 = std::max(rep.k2k0, interior_max(p.k2k0));
  rep.k2_k0_minus_k1 = std::max(rep.k2_k0_minus_k1, interior_max(p.tilt));
}

CVector extrapolate(const CVector& fine, const CVector& coarse) {
  CVector out(coarse.size());
  for (Eigen::Index j = 0; j < coarse.size(); ++j) out(j) = (4.0 * fine(2 * j) - coarse(j)) / 3.0;
  return out;
}

}  // namespace

DifferentialCommutatorResult differential_commutator_residual(double a, const YGrid& grid,
                                                              const std::vector<TestFunction>& tests) {
  // The coarse grid keeps every other point, so it needs an odd point count.
  const std::size_t fine_points = grid.points % 2 == 1 ? grid.points : grid.points - 1;
  const YGrid fine_grid(grid.y_min, grid.y_min + static_cast<double>(fine_points - 1) * grid.spacing(), fine_points);
  const YGrid coarse_grid(fine_grid.y_min, fine_grid.y_max, (fine_points + 1) / 2);
  const DifferentialRealization fine_r{a, grid}, fine_odd{a, fine_grid}, coarse_r{a, coarse_grid};

  DifferentialCommutatorResult out;
  for (const TestFunction& t : tests) {
    const CVector f = sample(t, grid);
    const double peak = f.cwiseAbs().maxCoeff();
    const Eigen::Index n = f.size();
    for (Eigen::Index j : {Eigen::Index{0}, Eigen::Index{1}, n - 2, n - 1}) {
      if (std::abs(f(j)) > 1e-8 * peak) throw DomainError("test function support touches the grid boundary");
    }
    accumulate(out.raw, pointwise(fine_r, f));

    const PointwiseResiduals pf = pointwise(fine_odd, sample(t, fine_grid));
    const PointwiseResiduals pc = pointwise(coarse_r, sample(t, coarse_grid));
    accumulate(out.coarse, pc);
    accumulate(out.richardson, {extrapolate(pf.k1k2, pc.k1k2), extrapolate(pf.k0k1, pc.k0k1),
                                extrapolate(pf.k2k0, pc.k2k0), extrapolate(pf.tilt, pc.tilt)});
  }
  return out;
}

RadialReductionResult radial_reduction_check(double Z, int l, double E, const YGrid& grid) {
  if (!(E < 0.0)) throw DomainError("radial reduction requires E < 0");
  if (!(Z > 0.0) || l < 0) throw DomainError("radial reduction requires Z > 0 and l >= 0");
  const double ll = static_cast<double>(l) * (l + 1);
  RadialReductionResult out;
  out.a_used = -4.0 * ll - 0.75;
  out.a_printed = 0.75 - 4.0 * ll;
  const double A = 0.5 - 64.0 * E, B = 0.5 + 64.0 * E;
  out.combination_identity = A + B - 1.0;
  out.y2_coefficient = (B - A) / 16.0;

  const auto n = static_cast<Eigen::Index>(grid.points);
  CVector Y(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double y = grid.at(static_cast<std::size_t>(j));
    Y(j) = std::pow(y, 1.5 + 2.0 * l) * std::exp(-Z * y * y / (l + 1.0));
  }
  const CVector d2 = fd::second_derivative(Y, grid.spacing(), 4);
  const DifferentialRealization r{out.a_used, grid};
  const CVector k0 = apply(r, YOperator::K0, Y, 4), k1 = apply(r, YOperator::K1, Y, 4);

  const Eigen::Index lo = 2, hi = n - 2;
  Eigen::MatrixXd design(hi - lo, 2);
  Eigen::VectorXd target(hi - lo);
  for (Eigen::Index j = lo; j < hi; ++j) {
    const double y = grid.at(static_cast<std::size_t>(j));
    const double yv = Y(j).real();
    const double base = d2(j).real() + 8.0 * E * y * y * yv;
    out.residual = std::max(out.residual, std::abs(base + out.a_used / (y * y) * yv + 8.0 * Z * yv));
    out.printed_residual = std::max(out.printed_residual, std::abs(base + out.a_printed / (y * y) * yv - 8.0 * Z * yv));
    out.operator_residual = std::max(out.operator_residual, std::abs(A * k0(j) + B * k1(j) + 8.0 * Z * Y(j)));
    design(j - lo, 0) = yv / (y * y);
    design(j - lo, 1) = yv;
    target(j - lo) = -base;
  }
  const Eigen::Vector2d coeff = design.colPivHouseholderQr().solve(target);
  out.a_fitted = coeff(0);
  out.z_coefficient_fitted = coeff(1);
  return out;
}

RadialGrid::RadialGrid(double lo, double hi, std::size_t n) : r_min(lo), r_max(hi), points(n) {
  if (!(lo > 0.0)) throw DomainError("radial grid must start at r_min > 0");
  if (!(hi > lo)) throw DomainError("radial grid needs r_max > r_min");
  if (n < 3) throw DomainError("radial grid needs at least 3 points");
}

namespace {

std::vector<double> fd_eigenvalues(double Z, int l, const RadialGrid& g, std::size_t count) {
  const double h = (g.r_max - g.r_min) / static_cast<double>(g.points - 1);
  const std::size_t interior = g.points - 2;
  if (count > interior) throw DomainError("requested more eigenvalues than interior grid points");
  const double ll = static_cast<double>(l) * (l + 1);
  std::vector<double> diag(interior), off(interior > 0 ? interior - 1 : 0, -0.5 / (h * h));
  for (std::size_t i = 0; i < interior; ++i) {
    const double r = g.r_min + static_cast<double>(i + 1) * h;
    diag[i] = 1.0 / (h * h) + ll / (2.0 * r * r) - Z / r;
  }
  return tridiagonal_lowest_eigenvalues(diag, off, count, 1e-12);
}

}  // namespace

FdSpectrum radial_fd_spectrum(double Z, int l, const RadialGrid& grid, std::size_t count, double refine_tol) {
  if (count < 1) throw DomainError("count must be at least 1");
  if (!(Z > 0.0) || l < 0) throw DomainError("radial spectrum requires Z > 0 and l >= 0");
  FdSpectrum out;
  out.eigenvalues = fd_eigenvalues(Z, l, grid, count);
  out.refined = fd_eigenvalues(Z, l, RadialGrid(grid.r_min, grid.r_max, 2 * grid.points - 1), count);
  for (std::size_t i = 0; i < count; ++i) {
    out.movement = std::max(out.movement, std::abs(out.eigenvalues[i] - out.refined[i]));
  }
  if (out.movement > refine_tol) {
    throw ConvergenceError("radial grid too coarse: eigenvalues move under refinement", out.movement);
  }
  return out;
}

}  // namespace su11
