#include "su11/coherent.hpp"

#include <cmath>
#include <numbers>

#include "su11/geometry.hpp"
#include "su11/quadrature.hpp"
#include "su11/special.hpp"

namespace su11 {

namespace {

// log |c_m|^2 = 2k log(1-r2) + log weight(m) + m log r2.
double log_coeff_sq(double k, double r2, std::size_t m) {
  return 2.0 * k * std::log1p(-r2) + log_ladder_weight(k, m) + static_cast<double>(m) * std::log(r2);
}

}  // namespace

double coherent_tail_bound(BargmannIndex k, double r2, FockCutoff M) {
  if (r2 == 0.0) return 0.0;
  const double kv = k.value();
  // Term ratio t_{m+1}/t_m = (2k+m)/(m+1) r2 is monotone in m and tends to r2.
  std::size_t m = M.M + 1;
  double log_t = log_coeff_sq(kv, r2, m);
  double sum = 0.0;
  for (std::size_t guard = 0; guard < 100000000; ++guard, ++m) {
    const double md = static_cast<double>(m);
    const double ratio = (2.0 * kv + md) / (md + 1.0) * r2;
    // Every later ratio lies between this one and r2.
    const double sup_ratio = std::max(ratio, r2);
    if (sup_ratio < 1.0 && (ratio <= 0.5 * (1.0 + r2) || kv < 0.5)) {
      return sum + std::exp(log_t) / (1.0 - sup_ratio);
    }
    sum += std::exp(log_t);
    log_t += std::log(ratio);
  }
  return sum;
}

CoherentState coherent_state(BargmannIndex k, DiskPoint z, FockCutoff M, double max_tail) {
  const double kv = k.value();
  const double r2 = z.norm2();
  const double phase = std::arg(z.value());
  CVector c = CVector::Zero(static_cast<Eigen::Index>(M.dim()));
  c(0) = std::exp(kv * std::log1p(-r2));
  if (r2 > 0.0) {
    for (std::size_t m = 1; m <= M.M; ++m) {
      const double mag = std::exp(0.5 * log_coeff_sq(kv, r2, m));
      c(static_cast<Eigen::Index>(m)) = std::polar(mag, static_cast<double>(m) * phase);
    }
  }
  CoherentState s{k, z, std::move(c)};
  s.tail_deficit = 1.0 - s.coeffs.squaredNorm();
  s.tail_bound = coherent_tail_bound(k, r2, M);
  s.tail_flagged = s.tail_bound > max_tail;
  return s;
}

DiskPoint displacement_to_disk(DisplacementParameter zeta) {
  const double a = std::abs(zeta);
  if (a == 0.0) return DiskPoint(0.0, 0.0);
  return DiskPoint(zeta / a * std::tanh(a));
}

TruncatedOperator su11_displacement(BargmannIndex k, DisplacementParameter zeta, FockCutoff M) {
  const GeneratorSet g = build_generators(k, M);
  const CMatrix gen = zeta * g.ops.Kplus.matrix() - std::conj(zeta) * g.ops.Kminus.matrix();
  return TruncatedOperator(DiscreteSeriesBasis{k.value()}, expm(gen).value);
}

std::complex<double> overlap(BargmannIndex k, DiskPoint z1, DiskPoint z2) {
  const double kv = k.value();
  const double num = std::exp(kv * (std::log1p(-z1.norm2()) + std::log1p(-z2.norm2())));
  const std::complex<double> den = std::pow(1.0 - std::conj(z1.value()) * z2.value(), 2.0 * kv);
  return num / den;
}

std::complex<double> expectation_monomial(BargmannIndex k, DiskPoint z, unsigned p, unsigned q, unsigned r,
                                          SeriesOptions opts) {
  const double kv = k.value();
  const double pd = p, rd = r;
  if (z.norm2() == 0.0) {
    // Only the m = 0, p = r term survives: |K+^p |k,0>|^2 (k+p)^q.
    if (p != r) return 0.0;
    const double v = log_rising_factorial(1.0, p).value() * log_rising_factorial(2.0 * kv, p).value() *
                     std::pow(kv + pd, q);
    return v;
  }
  const double r2 = z.norm2();
  const double log_r = 0.5 * std::log(r2);
  const double log_prefactor = 2.0 * kv * std::log1p(-r2) - std::lgamma(2.0 * kv);
  // Terms with m + p + 1 - r <= 0 vanish (reciprocal Gamma at its poles).
  const std::size_t m0 = r > p ? r - p : 0;

  double sum = 0.0;
  int small_run = 0;
  std::size_t m = m0;
  for (; m < m0 + opts.term_cap; ++m) {
    const double md = static_cast<double>(m);
    const SignedLog falling = log_falling_factorial(md + pd, r);
    if (falling.sign == 0) continue;
    const double log_term = log_prefactor + falling.log_abs + std::lgamma(md + pd + 2.0 * kv) -
                            std::lgamma(md + 1.0) + q * std::log(md + pd + kv) + (2.0 * md + pd - rd) * log_r;
    const double term = std::exp(log_term);
    sum += term;
    if (term < opts.tol * sum) {
      if (++small_run == 3) break;
    } else {
      small_run = 0;
    }
  }
  if (small_run < 3) {
    throw ConvergenceError("expectation_monomial: series did not converge within the term cap", sum);
  }
  return std::polar(sum, (pd - rd) * std::arg(z.value()));
}

GeneratorMeans expectation_generators(BargmannIndex k, DiskPoint z) {
  const PseudospherePoint y = embed(disk_to_polar(z));
  const double kv = k.value();
  return {kv * y.y1(), kv * y.y2(), kv * y.y0()};
}

DiskQuadrature::DiskQuadrature(std::size_t radial_nodes, std::size_t angular_nodes, double epsilon)
    : radial_(radial_nodes), angular_(angular_nodes), epsilon_(epsilon) {
  if (radial_nodes < 1 || angular_nodes < 1) throw DomainError("quadrature needs at least one node per axis");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("quadrature cutoff must satisfy 0 < epsilon < 1");
}

namespace {

// Sum over nodes of weight(u) * |z,k><z,k| d^2z, with d^2z = (1/2) du dphi.
template <class Weight>
CMatrix projector_quadrature(BargmannIndex k, const DiskQuadrature& quad, FockCutoff M, Weight weight) {
  const auto radial = gauss_legendre(quad.radial_nodes(), 0.0, 1.0 - quad.epsilon());
  const auto angular = periodic_trapezoid(quad.angular_nodes());
  const auto n = static_cast<Eigen::Index>(M.dim());
  CMatrix acc = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double u = radial.nodes[i];
    const double w_r = 0.5 * radial.weights[i] * weight(u);
    CMatrix ring = CMatrix::Zero(n, n);
    for (std::size_t j = 0; j < angular.nodes.size(); ++j) {
      const DiskPoint z(std::polar(std::sqrt(u), angular.nodes[j]));
      const CVector c = coherent_state(k, z, M, 1.0).coeffs;
      ring.noalias() += angular.weights[j] * (c * c.adjoint());
    }
    acc += w_r * ring;
  }
  return acc;
}

double off_diagonal_max(const CMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

// Weight of the neglected annulus 1-epsilon < |z|^2 < 1 in row m of the
// resolution of unity: at most a_m^2 epsilon^(2k-1).
double annulus_bias(double k, std::size_t m, double epsilon) {
  return std::exp(log_ladder_weight(k, m) + (2.0 * k - 1.0) * std::log(epsilon));
}

}  // namespace

UnityResult resolution_of_unity(BargmannIndex k, const DiskQuadrature& quad, FockCutoff M, std::size_t check_rows) {
  const double kv = k.value();
  if (!(kv > 0.5)) throw DomainError("resolution of unity requires k > 1/2");
  const double pref = (2.0 * kv - 1.0) / std::numbers::pi;

  UnityResult out;
  out.matrix = projector_quadrature(k, quad, M, [&](double u) { return pref / ((1.0 - u) * (1.0 - u)); });
  if (check_rows == 0) {
    while (check_rows < M.dim() && annulus_bias(kv, check_rows, quad.epsilon()) <= 1e-6) ++check_rows;
  }
  out.checked_rows = std::min(check_rows, M.dim());
  for (std::size_t m = 0; m < out.checked_rows; ++m) {
    out.cutoff_bias = std::max(out.cutoff_bias, annulus_bias(kv, m, quad.epsilon()));
  }
  const auto n = static_cast<Eigen::Index>(M.dim());
  out.residual = block_max_abs(CMatrix(out.matrix - CMatrix::Identity(n, n)), out.checked_rows);
  out.off_diagonal = off_diagonal_max(out.matrix);
  return out;
}

K0DiagonalResult k0_diagonal_representation(BargmannIndex k, const DiskQuadrature& quad, FockCutoff M,
                                            std::size_t check_rows) {
  const double kv = k.value();
  if (!(kv > 1.0)) throw DomainError("diagonal K0 representation is restricted to k > 1");
  K0DiagonalResult out;
  out.printed_prefactor = (2.0 * kv - 1.0) / (4.0 * std::numbers::pi);
  out.matrix = projector_quadrature(k, quad, M, [&](double u) {
    return out.printed_prefactor * (kv - 1.0) * (1.0 + u) / ((1.0 - u) * (1.0 - u) * (1.0 - u));
  });
  out.checked_rows = std::min(std::max<std::size_t>(check_rows, 1), M.dim());
  const auto c = static_cast<Eigen::Index>(out.checked_rows);
  const CMatrix block = out.matrix.topLeftCorner(c, c);
  const CMatrix k0 = build_generators(k, M).ops.K0.matrix().topLeftCorner(c, c);
  out.fitted_prefactor = (block.adjoint() * k0).trace().real() / block.squaredNorm();
  out.residual = max_abs(CMatrix(out.fitted_prefactor * block - k0));
  out.off_diagonal = off_diagonal_max(out.matrix);
  return out;
}

}  // namespace su11
