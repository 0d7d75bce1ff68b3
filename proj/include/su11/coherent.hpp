#pragma once

#include <complex>
#include <cstddef>

#include "su11/algebra.hpp"
#include "su11/disk.hpp"

namespace su11 {

// |z,k> = (1-|z|^2)^k sum_m sqrt(Gamma(2k+m) / (m! Gamma(2k))) z^m |k,m>,
// truncated to m <= M.
struct CoherentState {
  BargmannIndex k;
  DiskPoint z;
  CVector coeffs;
  double tail_deficit = 0.0;  // 1 - sum |c_m|^2
  double tail_bound = 0.0;    // upper bound on sum_{m>M} |c_m|^2
  bool tail_flagged = false;  // tail_bound above the requested bound
};

CoherentState coherent_state(BargmannIndex k, DiskPoint z, FockCutoff M, double max_tail = 1e-10);

// Upper bound on sum_{m>M} |c_m|^2 for |z|^2 = r2.
double coherent_tail_bound(BargmannIndex k, double r2, FockCutoff M);

using DisplacementParameter = std::complex<double>;

// z = (zeta / |zeta|) tanh|zeta|, the disk point reached by exp(zeta K+ - zeta* K-).
DiskPoint displacement_to_disk(DisplacementParameter zeta);

// exp(zeta K+ - conj(zeta) K-) on the truncated discrete-series space.
TruncatedOperator su11_displacement(BargmannIndex k, DisplacementParameter zeta, FockCutoff M);

// <z1,k|z2,k> = (1-|z1|^2)^k (1-|z2|^2)^k / (1 - conj(z1) z2)^(2k).
std::complex<double> overlap(BargmannIndex k, DiskPoint z1, DiskPoint z2);

struct SeriesOptions {
  double tol = 1e-16;               // relative size of a negligible term
  std::size_t term_cap = 1000000;   // ConvergenceError beyond this many terms
};

// <z,k| K-^p K0^q K+^r |z,k> by its power series in |z|^2.
std::complex<double> expectation_monomial(BargmannIndex k, DiskPoint z, unsigned p, unsigned q, unsigned r,
                                          SeriesOptions opts = {});

// Mean generator values in pseudosphere form (K1, K2, K0) = k (y1, y2, y0) with
// R = 1. <K1> and <K0> coincide with the operator expectation values; the
// operator value of <K2> is -k y2 (it equals this K2 evaluated at conj(z)).
struct GeneratorMeans {
  double K1 = 0.0;
  double K2 = 0.0;
  double K0 = 0.0;
};
GeneratorMeans expectation_generators(BargmannIndex k, DiskPoint z);

// Tensor rule: Gauss-Legendre in u = |z|^2 on [0, 1-epsilon] times a uniform
// angular grid.
class DiskQuadrature {
 public:
  DiskQuadrature(std::size_t radial_nodes, std::size_t angular_nodes, double epsilon);
  std::size_t radial_nodes() const { return radial_; }
  std::size_t angular_nodes() const { return angular_; }
  double epsilon() const { return epsilon_; }

 private:
  std::size_t radial_;
  std::size_t angular_;
  double epsilon_;
};

struct UnityResult {
  CMatrix matrix;
  double residual = 0.0;      // max |matrix - I| on the checked block
  double off_diagonal = 0.0;  // largest off-diagonal entry anywhere
  std::size_t checked_rows = 0;
  double cutoff_bias = 0.0;   // bound on the neglected annulus for the checked rows
};

// ((2k-1)/pi) * integral of d^2z / (1-|z|^2)^2 |z,k><z,k| with d^2z = dx dy,
// projected on |k,0> ... |k,M>. Requires k > 1/2. check_rows == 0 checks every
// row whose cutoff bias is below 1e-6.
UnityResult resolution_of_unity(BargmannIndex k, const DiskQuadrature& quad, FockCutoff M,
                                std::size_t check_rows = 0);

struct K0DiagonalResult {
  CMatrix matrix;
  double fitted_prefactor = 0.0;  // s minimising |s * matrix - K0| on the checked block
  double printed_prefactor = 0.0; // (2k-1)/(4 pi)
  double residual = 0.0;          // max |s * matrix - K0| on the checked block
  double off_diagonal = 0.0;
  std::size_t checked_rows = 0;
};

// Quadrature of (2k-1)/(4 pi) * (k-1) (1+|z|^2)/(1-|z|^2) d^2z/(1-|z|^2)^2 |z,k><z,k|.
// Restricted to k > 1.
K0DiagonalResult k0_diagonal_representation(BargmannIndex k, const DiskQuadrature& quad, FockCutoff M,
                                            std::size_t check_rows);

}  // namespace su11
