#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

#include "su11/algebra.hpp"

namespace su11 {

// Fock states |0> ... |N-1> per mode.
struct BosonicTruncation {
  std::size_t N = 2;
};

struct ModeOperators {
  TruncatedOperator a;
  TruncatedOperator adag;
};

ModeOperators mode_operators(BosonicTruncation n);

enum class Parity { even, odd };

// Parity for one mode, n0 = n_a - n_b for two modes.
using SectorLabel = std::variant<Parity, int>;

struct SectorDecomposition {
  SectorLabel label;
  std::vector<Eigen::Index> embedded_basis;  // indices into the Fock basis, lowest state first
  BargmannIndex k_equivalent;
};

// A realization on a Fock space together with the index set on which the
// polynomial identities are exact.
struct FockRealization {
  Generators ops;
  std::vector<Eigen::Index> interior;
};

// K+ = (a^dag)^2/2, K- = a^2/2, K0 = (a a^dag + a^dag a)/4. Requires N >= 4.
FockRealization one_mode_su11(BosonicTruncation n);

struct SectorRestriction {
  SectorDecomposition sector;
  Generators ops;              // generators restricted to the sector, labelled by k
  std::size_t interior_dim = 0;
  double deviation = 0.0;      // max entry difference vs build_generators on the interior
};

SectorRestriction parity_sector(BosonicTruncation n, Parity parity);

// Squeeze argument xi and SU(1,1) displacement argument zeta are related by
// zeta = squeeze_zeta_sign * xi, since exp(xi* K- - xi K+) = exp(zeta K+ - zeta* K-).
inline constexpr double squeeze_zeta_sign = -1.0;

// Disk point of the coherent state produced by squeezing the lowest state.
std::complex<double> squeeze_to_disk(std::complex<double> xi);

struct FockEvolution {
  TruncatedOperator op;
  CVector image;              // op applied to the reference state
  double edge_weight = 0.0;   // weight of the image on the outermost Fock shell
  bool tail_flagged = false;
};

inline constexpr double default_squeeze_limit = 3.0;

// S(xi) = exp(xi*/2 a^2 - xi/2 (a^dag)^2) with image S|0>. The outermost shell
// is |N-2>, |N-1>.
FockEvolution squeeze_one_mode(std::complex<double> xi, BosonicTruncation n, double tail_tol = 1e-12,
                               double xi_limit = default_squeeze_limit);

// Smallest N whose squeezed-vacuum tail sum_{n >= N} |<n|S(xi)|0>|^2 is below tol.
std::size_t squeeze_truncation(double abs_xi, double tol = 1e-12);

// D(alpha) = exp(alpha a^dag - alpha* a) with image D|0>. The outermost shell is |N-1>.
FockEvolution displacement_and_coherent(std::complex<double> alpha, BosonicTruncation n, double tail_tol = 1e-12);

// e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n < N.
CVector glauber_state(std::complex<double> alpha, BosonicTruncation n);

inline Eigen::Index two_mode_index(std::size_t na, std::size_t nb, std::size_t N) {
  return static_cast<Eigen::Index>(na * N + nb);
}

struct TwoModeRealization {
  FockRealization realization;
  std::vector<SectorDecomposition> sectors;  // n0 = -(N-1) ... N-1
};

// K+ = a^dag b^dag, K- = a b, K0 = (a^dag a + b^dag b + 1)/2 on the N^2 space.
TwoModeRealization two_mode_su11(BosonicTruncation n, std::size_t ceiling = dimension_ceiling());

// States |n + n0, n> (n0 >= 0) or |n, n + |n0|> (n0 < 0) with k = (|n0| + 1)/2.
SectorDecomposition two_mode_sector(BosonicTruncation n, int n0);

// Restriction of the two-mode generators to a sector; matches build_generators
// on the whole sector block.
SectorRestriction restrict_two_mode(const TwoModeRealization& r, int n0);

// S2(xi) = exp(xi* a b - xi a^dag b^dag), exponentiated block by block over the
// n0 sectors. image = S2 |n0, 0>. The outermost shell is max(n_a, n_b) = N-1.
FockEvolution squeeze_two_mode(std::complex<double> xi, BosonicTruncation n, int n0 = 0, double tail_tol = 1e-12,
                               double xi_limit = default_squeeze_limit, std::size_t ceiling = dimension_ceiling());

// Entries of m on the rows and columns in idx.
CMatrix restrict_to(const CMatrix& m, const std::vector<Eigen::Index>& idx);

}  // namespace su11
