#include "su11/optics.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "su11/coherent.hpp"
#include "su11/error.hpp"
#include "su11/special.hpp"

namespace su11 {

namespace {

void require_modes(BosonicTruncation n, std::size_t minimum) {
  if (n.N < minimum) throw DomainError("Fock truncation needs N >= " + std::to_string(minimum));
}

CMatrix annihilation(std::size_t N) {
  const auto n = static_cast<Eigen::Index>(N);
  CMatrix a = CMatrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) a(i - 1, i) = std::sqrt(static_cast<double>(i));
  return a;
}

double shell_weight(const CVector& v, const std::vector<Eigen::Index>& shell) {
  double w = 0.0;
  for (Eigen::Index i : shell) w += std::norm(v(i));
  return w;
}

Generators relabel(const Generators& g, const std::vector<Eigen::Index>& idx, const BasisLabel& label) {
  auto cut = [&](const TruncatedOperator& op) { return TruncatedOperator(label, restrict_to(op.matrix(), idx)); };
  return {cut(g.K0), cut(g.Kplus), cut(g.Kminus), cut(g.K1), cut(g.K2), cut(g.C)};
}

double generator_deviation(const Generators& a, const Generators& b, std::size_t rows) {
  return std::max({block_max_abs(CMatrix(a.K0.matrix() - b.K0.matrix()), rows),
                   block_max_abs(CMatrix(a.Kplus.matrix() - b.Kplus.matrix()), rows),
                   block_max_abs(CMatrix(a.Kminus.matrix() - b.Kminus.matrix()), rows),
                   block_max_abs(CMatrix(a.K1.matrix() - b.K1.matrix()), rows),
                   block_max_abs(CMatrix(a.K2.matrix() - b.K2.matrix()), rows),
                   block_max_abs(CMatrix(a.C.matrix() - b.C.matrix()), rows)});
}

void check_xi(std::complex<double> xi, double limit) {
  if (!(std::abs(xi) <= limit)) throw DomainError("squeeze argument exceeds the configured limit");
}

}  // namespace

CMatrix restrict_to(const CMatrix& m, const std::vector<Eigen::Index>& idx) { return m(idx, idx); }

ModeOperators mode_operators(BosonicTruncation n) {
  require_modes(n, 2);
  const CMatrix a = annihilation(n.N);
  return {TruncatedOperator(FockOneModeBasis{}, a), TruncatedOperator(FockOneModeBasis{}, a.adjoint())};
}

FockRealization one_mode_su11(BosonicTruncation n) {
  require_modes(n, 4);
  const ModeOperators m = mode_operators(n);
  const CMatrix& a = m.a.matrix();
  const CMatrix& ad = m.adag.matrix();
  const CMatrix k0 = 0.25 * (a * ad + ad * a);
  const CMatrix kp = 0.5 * ad * ad;
  FockRealization r{make_generators(k0, kp, FockOneModeBasis{}), {}};
  for (Eigen::Index i = 0; i + 2 < static_cast<Eigen::Index>(n.N); ++i) r.interior.push_back(i);
  return r;
}

SectorRestriction parity_sector(BosonicTruncation n, Parity parity) {
  const FockRealization full = one_mode_su11(n);
  const double k = parity == Parity::even ? 0.25 : 0.75;
  SectorDecomposition sector{parity, {}, BargmannIndex(k)};
  for (Eigen::Index i = parity == Parity::even ? 0 : 1; i < static_cast<Eigen::Index>(n.N); i += 2) {
    sector.embedded_basis.push_back(i);
  }
  const std::size_t size = sector.embedded_basis.size();
  SectorRestriction out{sector, relabel(full.ops, sector.embedded_basis, DiscreteSeriesBasis{k})};
  out.interior_dim = size > 2 ? size - 2 : 0;
  const GeneratorSet ref = build_generators(BargmannIndex(k), FockCutoff{size - 1});
  out.deviation = generator_deviation(out.ops, ref.ops, out.interior_dim);
  return out;
}

std::complex<double> squeeze_to_disk(std::complex<double> xi) {
  return displacement_to_disk(squeeze_zeta_sign * xi).value();
}

std::size_t squeeze_truncation(double abs_xi, double tol) {
  const double t = std::tanh(abs_xi);
  // Components |<2j|S|0>|^2 are the k = 1/4 coherent weights at |z| = t.
  std::size_t M = 0;
  while (coherent_tail_bound(BargmannIndex(0.25), t * t, FockCutoff{M}) > tol) ++M;
  return 2 * M + 2;
}

FockEvolution squeeze_one_mode(std::complex<double> xi, BosonicTruncation n, double tail_tol, double xi_limit) {
  require_modes(n, 4);
  check_xi(xi, xi_limit);
  const FockRealization r = one_mode_su11(n);
  const CMatrix gen = std::conj(xi) * r.ops.Kminus.matrix() - xi * r.ops.Kplus.matrix();
  FockEvolution out{TruncatedOperator(FockOneModeBasis{}, expm(gen).value), {}};
  out.image = out.op.matrix().col(0);
  const auto N = static_cast<Eigen::Index>(n.N);
  out.edge_weight = shell_weight(out.image, {N - 2, N - 1});
  out.tail_flagged = out.edge_weight > tail_tol;
  return out;
}

CVector glauber_state(std::complex<double> alpha, BosonicTruncation n) {
  const auto N = static_cast<Eigen::Index>(n.N);
  CVector v(N);
  v(0) = std::exp(-0.5 * std::norm(alpha));
  for (Eigen::Index i = 1; i < N; ++i) v(i) = v(i - 1) * alpha / std::sqrt(static_cast<double>(i));
  return v;
}

FockEvolution displacement_and_coherent(std::complex<double> alpha, BosonicTruncation n, double tail_tol) {
  const ModeOperators m = mode_operators(n);
  const CMatrix gen = alpha * m.adag.matrix() - std::conj(alpha) * m.a.matrix();
  FockEvolution out{TruncatedOperator(FockOneModeBasis{}, expm(gen).value), {}};
  out.image = out.op.matrix().col(0);
  out.edge_weight = shell_weight(out.image, {static_cast<Eigen::Index>(n.N) - 1});
  out.tail_flagged = out.edge_weight > tail_tol;
  return out;
}

SectorDecomposition two_mode_sector(BosonicTruncation n, int n0) {
  const std::size_t shift = static_cast<std::size_t>(std::abs(n0));
  if (shift >= n.N) throw DomainError("two-mode sector requires |n0| < N");
  SectorDecomposition s{n0, {}, BargmannIndex(0.5 * (static_cast<double>(shift) + 1.0))};
  for (std::size_t j = 0; j + shift < n.N; ++j) {
    s.embedded_basis.push_back(n0 >= 0 ? two_mode_index(j + shift, j, n.N) : two_mode_index(j, j + shift, n.N));
  }
  return s;
}

TwoModeRealization two_mode_su11(BosonicTruncation n, std::size_t ceiling) {
  require_modes(n, 2);
  if (n.N * n.N > ceiling) {
    throw DomainError("two-mode dimension " + std::to_string(n.N * n.N) + " exceeds ceiling " +
                      std::to_string(ceiling));
  }
  const auto N = static_cast<Eigen::Index>(n.N);
  const CMatrix a = annihilation(n.N);
  const CMatrix id = CMatrix::Identity(N, N);
  const CMatrix A = Eigen::kroneckerProduct(a, id);
  const CMatrix B = Eigen::kroneckerProduct(id, a);
  const CMatrix k0 = 0.5 * (A.adjoint() * A + B.adjoint() * B + CMatrix::Identity(N * N, N * N));
  const CMatrix kp = A.adjoint() * B.adjoint();

  TwoModeRealization out{{make_generators(k0, kp, FockTwoModeBasis{}), {}}, {}};
  for (Eigen::Index na = 0; na + 1 < N; ++na)
    for (Eigen::Index nb = 0; nb + 1 < N; ++nb) out.realization.interior.push_back(na * N + nb);
  for (int n0 = -static_cast<int>(n.N) + 1; n0 < static_cast<int>(n.N); ++n0) {
    out.sectors.push_back(two_mode_sector(n, n0));
  }
  return out;
}

SectorRestriction restrict_two_mode(const TwoModeRealization& r, int n0) {
  const std::size_t N = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(r.realization.ops.K0.dim()))));
  SectorDecomposition sector = two_mode_sector(BosonicTruncation{N}, n0);
  const double k = sector.k_equivalent.value();
  const std::size_t size = sector.embedded_basis.size();
  SectorRestriction out{sector, relabel(r.realization.ops, sector.embedded_basis, DiscreteSeriesBasis{k})};
  out.interior_dim = size;
  const GeneratorSet ref = build_generators(BargmannIndex(k), FockCutoff{size - 1});
  out.deviation = generator_deviation(out.ops, ref.ops, out.interior_dim);
  return out;
}

FockEvolution squeeze_two_mode(std::complex<double> xi, BosonicTruncation n, int n0, double tail_tol,
                               double xi_limit, std::size_t ceiling) {
  require_modes(n, 2);
  check_xi(xi, xi_limit);
  if (n.N * n.N > ceiling) {
    throw DomainError("two-mode dimension " + std::to_string(n.N * n.N) + " exceeds ceiling " +
                      std::to_string(ceiling));
  }
  const auto N = static_cast<Eigen::Index>(n.N);
  CMatrix s = CMatrix::Zero(N * N, N * N);
  for (int sector = -static_cast<int>(n.N) + 1; sector < static_cast<int>(n.N); ++sector) {
    const SectorDecomposition d = two_mode_sector(n, sector);
    const GeneratorSet g = build_generators(d.k_equivalent, FockCutoff{d.embedded_basis.size() - 1}, ceiling);
    const CMatrix gen = std::conj(xi) * g.ops.Kminus.matrix() - xi * g.ops.Kplus.matrix();
    s(d.embedded_basis, d.embedded_basis) = expm(gen).value;
  }
  FockEvolution out{TruncatedOperator(FockTwoModeBasis{}, s), {}};
  const SectorDecomposition start = two_mode_sector(n, n0);
  out.image = s.col(start.embedded_basis.front());
  std::vector<Eigen::Index> shell;
  for (Eigen::Index i = 0; i < N; ++i) {
    shell.push_back((N - 1) * N + i);
    if (i + 1 < N) shell.push_back(i * N + N - 1);
  }
  out.edge_weight = shell_weight(out.image, shell);
  out.tail_flagged = out.edge_weight > tail_tol;
  return out;
}

}  // namespace su11
