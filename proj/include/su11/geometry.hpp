#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "su11/disk.hpp"

namespace su11 {

// Geodesic polar coordinates about the pole: tau is the distance from the
// pole, phi the angle.
struct PolarCoords {
  double tau = 0.0;
  double phi = 0.0;
};

// Point of the upper sheet y1^2 + y2^2 - y0^2 = -R^2, y0 >= R.
class PseudospherePoint {
 public:
  PseudospherePoint(double y1, double y2, double y0, double R = 1.0);

  double y1() const { return y1_; }
  double y2() const { return y2_; }
  double y0() const { return y0_; }
  double radius() const { return R_; }
  Eigen::Vector3d coords() const { return {y1_, y2_, y0_}; }

 private:
  double y1_, y2_, y0_, R_;
};

DiskPoint polar_to_disk(PolarCoords p);
PolarCoords disk_to_polar(DiskPoint z);

PseudospherePoint embed(PolarCoords p, double R = 1.0);
// Stereographic projection from (0, 0, -R): z = (y1 + i y2) / (R + y0).
DiskPoint project(const PseudospherePoint& p);

// Isometry of the pseudosphere acting on (y1, y2, y0) column vectors.
class LorentzMatrix {
 public:
  explicit LorentzMatrix(const Eigen::Matrix3d& m);
  const Eigen::Matrix3d& matrix() const { return m_; }
  LorentzMatrix operator*(const LorentzMatrix& o) const { return LorentzMatrix(m_ * o.m_); }
  PseudospherePoint apply(const PseudospherePoint& p) const;

 private:
  Eigen::Matrix3d m_;
};

// max |L Q L^T - Q| with Q = diag(1, 1, -1).
double lorentz_residual(const Eigen::Matrix3d& m);

LorentzMatrix isometry_rotation(double phi0);
// Boost of rapidity tau0 towards angle phi0; phi0 = pi/2 is the y2 boost.
LorentzMatrix isometry_boost(double tau0, double phi0);
// Reflection through the (y1, y0) plane.
LorentzMatrix isometry_reflection();

// z -> (alpha z + beta) / (conj(beta) z + conj(alpha)), |alpha|^2 - |beta|^2 = 1.
class MobiusTransform {
 public:
  MobiusTransform(std::complex<double> alpha, std::complex<double> beta);
  std::complex<double> alpha() const { return alpha_; }
  std::complex<double> beta() const { return beta_; }

  // [[alpha, beta], [conj(beta), conj(alpha)]] acting on (z, 1)^T.
  Eigen::Matrix2cd matrix() const;
  // (this o other)(z) = this(other(z)).
  MobiusTransform operator*(const MobiusTransform& other) const;
  MobiusTransform inverse() const;
  // dz'/dz = 1 / (conj(beta) z + conj(alpha))^2.
  std::complex<double> derivative(DiskPoint z) const;

 private:
  std::complex<double> alpha_, beta_;
};

MobiusTransform mobius_rotation(double phi0);
MobiusTransform mobius_boost(double tau0, double phi0);
DiskPoint apply_mobius(const MobiusTransform& t, DiskPoint z);
DiskPoint reflect(DiskPoint z);

// Distance for ds^2 = dtau^2 + sinh^2(tau) dphi^2, so that d(0, z) = tau.
double geodesic_distance(DiskPoint z1, DiskPoint z2);

// Samples of the geodesic from a to b (inclusive), evenly spaced in arclength.
struct ArcSample {
  double s;
  DiskPoint z;
};
std::vector<ArcSample> geodesic_arc(DiskPoint a, DiskPoint b, std::size_t samples);

// Conformal area weight 1 / (1 - |z|^2)^2.
double area_weight(DiskPoint z);

}  // namespace su11
