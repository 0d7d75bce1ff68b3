#include "su11/algebra.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <cstdlib>
#include <string>

#include "su11/special.hpp"

namespace su11 {

BargmannIndex::BargmannIndex(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("Bargmann index must satisfy k > 0");
}

std::size_t dimension_ceiling() {
  if (const char* env = std::getenv("SU11_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

Generators make_generators(const CMatrix& k0, const CMatrix& kplus, const BasisLabel& label) {
  const CMatrix kminus = kplus.adjoint();
  const CMatrix k1 = 0.5 * (kplus + kminus);
  const CMatrix k2 = (kplus - kminus) / cplx(0.0, 2.0);
  const CMatrix c = k0 * k0 - k1 * k1 - k2 * k2;
  return {TruncatedOperator(label, k0),     TruncatedOperator(label, kplus), TruncatedOperator(label, kminus),
          TruncatedOperator(label, k1),     TruncatedOperator(label, k2),    TruncatedOperator(label, c)};
}

GeneratorSet build_generators(BargmannIndex k, FockCutoff M, std::size_t ceiling) {
  if (M.dim() > ceiling) {
    throw DomainError("build_generators: dimension " + std::to_string(M.dim()) + " exceeds ceiling " +
                      std::to_string(ceiling));
  }
  const auto n = static_cast<Eigen::Index>(M.dim());
  const double kv = k.value();
  CMatrix k0 = CMatrix::Zero(n, n);
  CMatrix kp = CMatrix::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    const double md = static_cast<double>(m);
    k0(m, m) = kv + md;
    if (m + 1 < n) kp(m + 1, m) = std::sqrt((md + 1.0) * (2.0 * kv + md));
  }
  return {k, M, make_generators(k0, kp, DiscreteSeriesBasis{kv})};
}

double CommutatorResiduals::max() const { return std::max({k1k2, k0k1, k2k0}); }

CommutatorResiduals commutator_residuals(const Generators& g, std::size_t interior_dim) {
  CommutatorResiduals r;
  if (interior_dim == 0) {
    r.degenerate = true;
    return r;
  }
  const cplx i(0.0, 1.0);
  const CMatrix& k0 = g.K0.matrix();
  const CMatrix& k1 = g.K1.matrix();
  const CMatrix& k2 = g.K2.matrix();
  r.k1k2 = block_max_abs(CMatrix(k1 * k2 - k2 * k1 + i * k0), interior_dim);
  r.k0k1 = block_max_abs(CMatrix(k0 * k1 - k1 * k0 - i * k2), interior_dim);
  r.k2k0 = block_max_abs(CMatrix(k2 * k0 - k0 * k2 - i * k1), interior_dim);
  return r;
}

CommutatorResiduals commutator_residuals(const Generators& g, const std::vector<Eigen::Index>& rows) {
  CommutatorResiduals r;
  if (rows.empty()) {
    r.degenerate = true;
    return r;
  }
  const cplx i(0.0, 1.0);
  const CMatrix& k0 = g.K0.matrix();
  const CMatrix& k1 = g.K1.matrix();
  const CMatrix& k2 = g.K2.matrix();
  auto norm_on = [&](const CMatrix& m) { return max_abs(CMatrix(m(rows, rows))); };
  r.k1k2 = norm_on(k1 * k2 - k2 * k1 + i * k0);
  r.k0k1 = norm_on(k0 * k1 - k1 * k0 - i * k2);
  r.k2k0 = norm_on(k2 * k0 - k0 * k2 - i * k1);
  return r;
}

CommutatorResiduals commutator_residuals(const GeneratorSet& g) {
  return commutator_residuals(g.ops, g.interior_dim());
}

double casimir_interior_deviation(const GeneratorSet& g) {
  const CMatrix& c = g.ops.C.matrix();
  const CMatrix shifted = c - g.k.casimir() * CMatrix::Identity(c.rows(), c.cols());
  return block_max_abs(shifted, g.interior_dim());
}

namespace {

// With P = K+ (real, subdiagonal): K1 = (P + P^T)/2, K2 = (P - P^T)/(2i), so
// [K1,K2] + iK0 = -(i/2)(P^T P - P P^T - 2K0) and C = K0^2 - (P P^T + P^T P)/2.
template <class Real>
LadderResiduals ladder_kernel(double kd, std::size_t dim, std::size_t interior) {
  using std::abs;
  using std::sqrt;
  const Real k(kd);
  std::vector<Real> a(dim + 1), d(dim + 1);
  for (std::size_t m = 0; m <= dim; ++m) {
    const Real mm(static_cast<double>(m));
    a[m] = m + 1 < dim ? Real(sqrt((mm + 1) * (2 * k + mm))) : Real(0);  // <m+1|P|m>
    d[m] = k + mm;
  }
  Real r12(0), r01(0), r20(0), cas(0);
  for (std::size_t m = 0; m < interior; ++m) {
    const Real below = m > 0 ? a[m - 1] * a[m - 1] : Real(0);  // (P P^T)_mm
    const Real above = a[m] * a[m];                             // (P^T P)_mm
    r12 = std::max(r12, Real(abs(above - below - 2 * d[m]) / 2));
    cas = std::max(cas, Real(abs(d[m] * d[m] - (above + below) / 2 - k * (k - 1))));
    if (m + 1 < interior) {
      // [K0,P] = P and [K0,P^T] = -P^T entrywise on the band.
      const Real sub = abs((d[m + 1] - d[m]) * a[m] - a[m]) / 2;
      const Real sup = abs((d[m] - d[m + 1]) * a[m] + a[m]) / 2;
      r01 = std::max({r01, sub, sup});
      r20 = std::max({r20, sub, sup});
    }
  }
  LadderResiduals out;
  out.commutators.k1k2 = static_cast<double>(r12);
  out.commutators.k0k1 = static_cast<double>(r01);
  out.commutators.k2k0 = static_cast<double>(r20);
  out.commutators.degenerate = interior == 0;
  out.casimir = static_cast<double>(cas);
  return out;
}

}  // namespace

LadderResiduals ladder_interior_residuals(BargmannIndex k, FockCutoff M, Precision precision) {
  const std::size_t dim = M.dim();
  const std::size_t interior = dim > 2 ? dim - 2 : 0;
  return precision == Precision::binary128
             ? ladder_kernel<boost::multiprecision::float128>(k.value(), dim, interior)
             : ladder_kernel<double>(k.value(), dim, interior);
}

namespace {

struct TiltKernelResult {
  RMatrix tilted;
  double residual;
  double full_residual;
};

// exp(-i theta K2) = exp(-theta (K+ - K-)/2) is real, so the whole
// conjugation runs in real arithmetic at the requested precision.
template <class Real>
TiltKernelResult tilt_kernel(double k, std::size_t dim, double theta, std::size_t interior) {
  using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  const auto n = static_cast<Eigen::Index>(dim);
  const Real kr(k);
  const Real th(theta);
  Mat k0 = Mat::Zero(n, n);
  Mat k1 = Mat::Zero(n, n);
  Mat gen = Mat::Zero(n, n);  // -i theta K2
  for (Eigen::Index m = 0; m < n; ++m) {
    const Real md(static_cast<double>(m));
    k0(m, m) = kr + md;
    if (m + 1 < n) {
      const Real e = sqrt((md + 1) * (2 * kr + md));
      k1(m + 1, m) = e / 2;
      k1(m, m + 1) = e / 2;
      gen(m + 1, m) = -th * e / 2;
      gen(m, m + 1) = th * e / 2;
    }
  }
  ExpmOptions eopts;
  eopts.tolerance = 1e-9;
  const Mat u = expm(gen, eopts).value;
  // The generator is antisymmetric, so U^-1 = exp(+i theta K2) = U^T.
  const Mat tilted = u * k0 * u.transpose();
  const Mat diff = tilted - (k0 * cosh(th) + k1 * sinh(th));

  TiltKernelResult out;
  out.tilted = tilted.template cast<double>();
  out.residual = block_max_abs(diff, interior);
  out.full_residual = max_abs(diff);
  return out;
}

}  // namespace

TiltResult tilted_k0(const GeneratorSet& g, double theta, TiltOptions opts) {
  if (!std::isfinite(theta) || std::fabs(theta) > opts.theta_limit) {
    throw DomainError("tilted_k0: |theta| exceeds the configured limit");
  }
  const std::size_t dim = g.cutoff.dim();
  std::size_t interior = opts.interior_rows == 0 ? (dim + 2) / 3 : opts.interior_rows;
  interior = std::min(interior, dim);

  TiltKernelResult r = opts.precision == Precision::binary128
                           ? tilt_kernel<boost::multiprecision::float128>(g.k.value(), dim, theta, interior)
                           : tilt_kernel<double>(g.k.value(), dim, theta, interior);
  return {TruncatedOperator(DiscreteSeriesBasis{g.k.value()}, r.tilted.cast<cplx>()), r.residual, r.full_residual,
          interior};
}

double ladder_reconstruction_check(BargmannIndex k, FockCutoff M) {
  const GeneratorSet g = build_generators(k, M);
  const CMatrix& kp = g.ops.Kplus.matrix();
  const auto n = static_cast<Eigen::Index>(M.dim());
  const std::size_t last = M.M == 0 ? 0 : M.M - 1;

  CVector v = CVector::Zero(n);
  v(0) = 1.0;
  double log_scale = 0.0;  // v_true = exp(log_scale) * v
  double worst = 0.0;
  for (std::size_t m = 0; m <= last; ++m) {
    if (m > 0) {
      v = kp * v;
      const double s = max_abs(v);
      v /= s;
      log_scale += std::log(s);
    }
    const double log_prefactor =
        0.5 * (std::lgamma(2.0 * k.value()) - std::lgamma(static_cast<double>(m) + 1.0) -
               std::lgamma(2.0 * k.value() + static_cast<double>(m)));
    CVector built = std::exp(log_prefactor + log_scale) * v;
    built(static_cast<Eigen::Index>(m)) -= 1.0;
    worst = std::max(worst, max_abs(built));
  }
  return worst;
}

}  // namespace su11
