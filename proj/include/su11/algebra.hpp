#pragma once

#include <cstddef>
#include <vector>

#include "su11/operator.hpp"

namespace su11 {

// Bargmann index k > 0 of a positive discrete-series representation.
class BargmannIndex {
 public:
  explicit BargmannIndex(double k);
  double value() const { return k_; }
  // Casimir eigenvalue k(k-1).
  double casimir() const { return k_ * (k_ - 1.0); }

 private:
  double k_;
};

// Truncation |k,0>, ..., |k,M> of the discrete-series basis (dimension M+1).
struct FockCutoff {
  std::size_t M = 0;
  std::size_t dim() const { return M + 1; }
};

// Dense-storage ceiling on operator dimension. Defaults to 4096 and can be
// overridden with the SU11_MAX_DIM environment variable.
std::size_t dimension_ceiling();

// The six operators of a realization, all on the same truncated basis.
struct Generators {
  TruncatedOperator K0;
  TruncatedOperator Kplus;
  TruncatedOperator Kminus;
  TruncatedOperator K1;
  TruncatedOperator K2;
  TruncatedOperator C;
};

// Completes a realization from K0 and K+: K- = (K+)^dagger,
// K1 = (K+ + K-)/2, K2 = (K+ - K-)/(2i), C = K0^2 - K1^2 - K2^2.
Generators make_generators(const CMatrix& k0, const CMatrix& kplus, const BasisLabel& label);

struct GeneratorSet {
  BargmannIndex k;
  FockCutoff cutoff;
  Generators ops;

  // Rows/columns 0 .. M-margin carry exact polynomial identities; the
  // truncation only corrupts the trailing band.
  std::size_t interior_dim(std::size_t margin = 2) const {
    return cutoff.dim() > margin ? cutoff.dim() - margin : 0;
  }
};

// Matrix elements from the normalised ladder:
//   <m+1|K+|m> = sqrt((m+1)(2k+m)),  <m|K0|m> = k+m.
GeneratorSet build_generators(BargmannIndex k, FockCutoff M, std::size_t ceiling = dimension_ceiling());

struct CommutatorResiduals {
  double k1k2 = 0.0;  // [K1,K2] + i K0
  double k0k1 = 0.0;  // [K0,K1] - i K2
  double k2k0 = 0.0;  // [K2,K0] - i K1
  bool degenerate = false;  // empty interior block
  double max() const;
};

CommutatorResiduals commutator_residuals(const Generators& g, std::size_t interior_dim);
CommutatorResiduals commutator_residuals(const GeneratorSet& g);
// Same residuals on an arbitrary index set (products are formed on the full space).
CommutatorResiduals commutator_residuals(const Generators& g, const std::vector<Eigen::Index>& rows);

// max |C - k(k-1) I| on the interior block.
double casimir_interior_deviation(const GeneratorSet& g);

enum class Precision { binary64, binary128 };

struct LadderResiduals {
  CommutatorResiduals commutators;
  double casimir = 0.0;  // max |C - k(k-1)| on the interior
};

// Interior residuals recomputed from the ladder elements at the requested
// precision, using the band structure instead of dense products.
LadderResiduals ladder_interior_residuals(BargmannIndex k, FockCutoff M, Precision precision);

struct TiltOptions {
  // Leading rows/columns on which the identity is checked; 0 selects ceil((M+1)/3).
  std::size_t interior_rows = 0;
  double theta_limit = 10.0;
  // binary128 resolves truncation errors far below double roundoff.
  Precision precision = Precision::binary64;
};

struct TiltResult {
  TruncatedOperator op;  // U K0 U^-1 with U = exp(-i theta K2)
  double residual = 0.0;       // vs K0 cosh(theta) + K1 sinh(theta), interior block
  double full_residual = 0.0;  // same on the whole truncated space
  std::size_t interior_rows = 0;
};

TiltResult tilted_k0(const GeneratorSet& g, double theta, TiltOptions opts = {});

// Rebuilds |k,m> = sqrt(Gamma(2k) / (m! Gamma(2k+m))) (K+)^m |k,0> for
// m = 0 .. max(M-1, 0) and returns the largest deviation from the unit vector e_m.
double ladder_reconstruction_check(BargmannIndex k, FockCutoff M);

}  // namespace su11
