#include "su11/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace su11 {

namespace {
constexpr double kInvariantTol = 1e-12;

Eigen::Matrix3d minkowski() { return Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal(); }
}  // namespace

PseudospherePoint::PseudospherePoint(double y1, double y2, double y0, double R)
    : y1_(y1), y2_(y2), y0_(y0), R_(R) {
  if (!(R > 0.0)) throw DomainError("pseudosphere radius must be positive");
  const double form = y1 * y1 + y2 * y2 - y0 * y0 + R * R;
  if (!(std::fabs(form) <= kInvariantTol * std::max(R * R, y0 * y0))) {
    throw DomainError("point is not on the hyperboloid y1^2 + y2^2 - y0^2 = -R^2");
  }
  if (!(y0 >= R * (1.0 - kInvariantTol))) throw DomainError("point is not on the upper sheet");
}

DiskPoint polar_to_disk(PolarCoords p) {
  if (!(p.tau >= 0.0)) throw DomainError("polar coordinates need tau >= 0");
  return DiskPoint(std::polar(std::tanh(p.tau / 2.0), p.phi));
}

PolarCoords disk_to_polar(DiskPoint z) {
  const double r = z.abs();
  return {2.0 * std::atanh(r), r == 0.0 ? 0.0 : std::arg(z.value())};
}

PseudospherePoint embed(PolarCoords p, double R) {
  if (!(p.tau >= 0.0)) throw DomainError("polar coordinates need tau >= 0");
  const double sh = std::sinh(p.tau);
  return PseudospherePoint(R * sh * std::cos(p.phi), R * sh * std::sin(p.phi), R * std::cosh(p.tau), R);
}

DiskPoint project(const PseudospherePoint& p) {
  return DiskPoint(std::complex<double>(p.y1(), p.y2()) / (p.radius() + p.y0()));
}

double lorentz_residual(const Eigen::Matrix3d& m) {
  return (m * minkowski() * m.transpose() - minkowski()).cwiseAbs().maxCoeff();
}

LorentzMatrix::LorentzMatrix(const Eigen::Matrix3d& m) : m_(m) {
  if (!(lorentz_residual(m) <= kInvariantTol * std::max(1.0, m.cwiseAbs().maxCoeff() * m.cwiseAbs().maxCoeff()))) {
    throw DomainError("matrix does not preserve the Minkowski form");
  }
  if (!(m(2, 2) > 0.0)) throw DomainError("isometry must preserve the upper sheet");
}

PseudospherePoint LorentzMatrix::apply(const PseudospherePoint& p) const {
  const Eigen::Vector3d y = m_ * p.coords();
  return PseudospherePoint(y(0), y(1), y(2), p.radius());
}

LorentzMatrix isometry_rotation(double phi0) {
  Eigen::Matrix3d m;
  m << std::cos(phi0), -std::sin(phi0), 0.0,
       std::sin(phi0), std::cos(phi0), 0.0,
       0.0, 0.0, 1.0;
  return LorentzMatrix(m);
}

LorentzMatrix isometry_boost(double tau0, double phi0) {
  Eigen::Matrix3d b;
  b << 1.0, 0.0, 0.0,
       0.0, std::cosh(tau0), std::sinh(tau0),
       0.0, std::sinh(tau0), std::cosh(tau0);
  const double turn = phi0 - std::numbers::pi / 2.0;
  if (turn == 0.0) return LorentzMatrix(b);
  return isometry_rotation(turn) * LorentzMatrix(b) * isometry_rotation(-turn);
}

LorentzMatrix isometry_reflection() {
  return LorentzMatrix(Eigen::Vector3d(1.0, -1.0, 1.0).asDiagonal().toDenseMatrix());
}

MobiusTransform::MobiusTransform(std::complex<double> alpha, std::complex<double> beta)
    : alpha_(alpha), beta_(beta) {
  const double det = std::norm(alpha) - std::norm(beta);
  if (!(std::fabs(det - 1.0) <= kInvariantTol * std::max(1.0, std::norm(alpha)))) {
    throw DomainError("Mobius transform needs |alpha|^2 - |beta|^2 = 1");
  }
}

Eigen::Matrix2cd MobiusTransform::matrix() const {
  Eigen::Matrix2cd m;
  m << alpha_, beta_, std::conj(beta_), std::conj(alpha_);
  return m;
}

MobiusTransform MobiusTransform::operator*(const MobiusTransform& o) const {
  const Eigen::Matrix2cd p = matrix() * o.matrix();
  return MobiusTransform(p(0, 0), p(0, 1));
}

MobiusTransform MobiusTransform::inverse() const { return MobiusTransform(std::conj(alpha_), -beta_); }

std::complex<double> MobiusTransform::derivative(DiskPoint z) const {
  const std::complex<double> d = std::conj(beta_) * z.value() + std::conj(alpha_);
  return 1.0 / (d * d);
}

MobiusTransform mobius_rotation(double phi0) {
  return MobiusTransform(std::polar(1.0, phi0 / 2.0), 0.0);
}

MobiusTransform mobius_boost(double tau0, double phi0) {
  return MobiusTransform(std::cosh(tau0 / 2.0), std::polar(std::sinh(tau0 / 2.0), phi0));
}

DiskPoint apply_mobius(const MobiusTransform& t, DiskPoint z) {
  const std::complex<double> w = z.value();
  return DiskPoint((t.alpha() * w + t.beta()) / (std::conj(t.beta()) * w + std::conj(t.alpha())));
}

DiskPoint reflect(DiskPoint z) { return DiskPoint(std::conj(z.value())); }

double geodesic_distance(DiskPoint z1, DiskPoint z2) {
  const std::complex<double> a = z1.value();
  const std::complex<double> b = z2.value();
  const double ratio = std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  if (ratio < 0.25) return std::log1p(2.0 * ratio / (1.0 - ratio));
  return std::log((1.0 + ratio) / (1.0 - ratio));
}

std::vector<ArcSample> geodesic_arc(DiskPoint a, DiskPoint b, std::size_t samples) {
  if (samples < 2) throw DomainError("geodesic_arc: need at least two samples");
  // Move a to the origin, where geodesics are diameters, then map back.
  const MobiusTransform to_origin(1.0 / std::sqrt(1.0 - a.norm2()), -a.value() / std::sqrt(1.0 - a.norm2()));
  const MobiusTransform back = to_origin.inverse();
  const DiskPoint w = apply_mobius(to_origin, b);
  const double length = geodesic_distance(a, b);
  const double dir = w.abs() == 0.0 ? 0.0 : std::arg(w.value());
  std::vector<ArcSample> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double s = length * static_cast<double>(i) / static_cast<double>(samples - 1);
    const DiskPoint radial(std::polar(std::tanh(s / 2.0), dir));
    out.push_back({s, apply_mobius(back, radial)});
  }
  return out;
}

double area_weight(DiskPoint z) {
  const double d = 1.0 - z.norm2();
  return 1.0 / (d * d);
}

}  // namespace su11
