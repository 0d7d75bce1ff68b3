#include "su11/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "su11/algebra.hpp"
#include "su11/cli.hpp"
#include "su11/coherent.hpp"
#include "su11/geometry.hpp"
#include "su11/hydrogen.hpp"
#include "su11/optics.hpp"
#include "su11/phase_space.hpp"
#include "su11/symplectic.hpp"

namespace su11 {

namespace {

using cd = std::complex<double>;

class Sink {
 public:
  explicit Sink(std::vector<CheckRow>& rows) : rows_(rows) {}
  void begin(const OpInfo& info) { info_ = &info; }
  void check(std::string what, double value, double tol) {
    rows_.push_back({std::string(info_->module), std::string(info_->name), std::move(what), value, tol,
                     value <= tol});
  }
  void fail(std::string what) { check(std::move(what), std::numeric_limits<double>::infinity(), 0.0); }

 private:
  std::vector<CheckRow>& rows_;
  const OpInfo* info_ = nullptr;
};

double fidelity_defect(const CVector& a, const CVector& b) { return 1.0 - std::norm(a.dot(b)); }

// ---- algebra_core

void v_build_generators(Sink& s) {
  const GeneratorSet g = build_generators(BargmannIndex(1.5), FockCutoff{20});
  double dev = 0.0;
  for (int m = 0; m <= 20; ++m) {
    dev = std::max(dev, std::abs(g.ops.K0.matrix()(m, m) - (1.5 + m)));
    if (m < 20) dev = std::max(dev, std::abs(g.ops.Kplus.matrix()(m + 1, m) - std::sqrt((m + 1.0) * (3.0 + m))));
  }
  s.check("ladder matrix elements k=1.5 M=20", dev, 1e-14);
}

void v_commutator_residuals(Sink& s) {
  for (double k : {0.25, 2.5}) {
    const GeneratorSet g = build_generators(BargmannIndex(k), FockCutoff{64});
    s.check("commutators k=" + shortest(k) + " M=64", commutator_residuals(g).max(), 1e-12);
    s.check("Casimir k=" + shortest(k) + " M=64", casimir_interior_deviation(g), 1e-12);
  }
}

void v_ladder_interior(Sink& s) {
  const auto q = ladder_interior_residuals(BargmannIndex(2.5), FockCutoff{256}, Precision::binary128);
  s.check("binary128 commutators k=2.5 M=256", q.commutators.max(), 1e-25);
  s.check("binary128 Casimir k=2.5 M=256", q.casimir, 1e-25);
  const auto d = ladder_interior_residuals(BargmannIndex(2.5), FockCutoff{256}, Precision::binary64);
  s.check("binary64 vs rounding floor 8 eps (k+M+1)^2", d.commutators.max() / (8.0 * 2.220446049250313e-16 * 259.5 * 259.5),
          1.0);
}

void v_tilted_k0(Sink& s) {
  TiltOptions o;
  o.interior_rows = 21;
  const TiltResult r = tilted_k0(build_generators(BargmannIndex(1.0), FockCutoff{60}), 0.5, o);
  s.check("tilt k=1 M=60 theta=0.5 rows 0-20", r.residual, 1e-8);
  o.precision = Precision::binary128;
  const double r30 = tilted_k0(build_generators(BargmannIndex(1.0), FockCutoff{30}), 0.5, o).residual;
  const double r60 = tilted_k0(build_generators(BargmannIndex(1.0), FockCutoff{60}), 0.5, o).residual;
  s.check("binary128 residual ratio M=60/M=30", r60 / r30, 0.1);
}

void v_ladder(Sink& s) {
  s.check("ladder reconstruction k=1 M=40", ladder_reconstruction_check(BargmannIndex(1.0), FockCutoff{40}), 1e-12);
  s.check("ladder reconstruction k=0.25 M=40", ladder_reconstruction_check(BargmannIndex(0.25), FockCutoff{40}),
          1e-12);
}

// ---- coherent_states

void v_coherent_state(Sink& s) {
  const auto c = coherent_state(BargmannIndex(1.0), DiskPoint(0.5, 0.0), FockCutoff{1});
  s.check("c0 = 0.75", std::abs(c.coeffs(0) - 0.75), 1e-15);
  s.check("c1 = 0.75 sqrt(2) 0.5", std::abs(c.coeffs(1) - 0.375 * std::sqrt(2.0)), 1e-15);
  const auto t = coherent_state(BargmannIndex(1.0), DiskPoint(0.5, 0.0), FockCutoff{20});
  s.check("tail deficit below bound", t.tail_deficit - t.tail_bound, 1e-15);
}

void v_displacement_to_disk(Sink& s) {
  const cd zeta(0.0, 0.3);
  s.check("z = i tanh 0.3", std::abs(displacement_to_disk(zeta).value() - cd(0.0, std::tanh(0.3))), 1e-15);
  const auto d = su11_displacement(BargmannIndex(1.0), zeta, FockCutoff{60});
  const auto c = coherent_state(BargmannIndex(1.0), displacement_to_disk(zeta), FockCutoff{60});
  s.check("matrix displacement fidelity defect", fidelity_defect(d.matrix().col(0), c.coeffs), 1e-10);
}

void v_overlap(Sink& s) {
  const BargmannIndex k(1.0);
  const DiskPoint a(0.5, 0.0), b(0.0, 0.5);
  const cd closed = overlap(k, a, b);
  const cd sum = coherent_state(k, a, FockCutoff{60}).coeffs.dot(coherent_state(k, b, FockCutoff{60}).coeffs);
  s.check("closed form vs coefficients M=60", std::abs(closed - sum), 1e-12);
  s.check("closed value", std::abs(closed - 0.5625 / std::pow(cd(1.0, -0.25), 2)), 1e-15);
}

void v_expectation_monomial(Sink& s) {
  const BargmannIndex k(1.0);
  const DiskPoint z(0.5, 0.0);
  s.check("<K-> = 4/3", std::abs(expectation_monomial(k, z, 1, 0, 0) - 4.0 / 3.0), 1e-12);
  s.check("<K0> = 5/3", std::abs(expectation_monomial(k, z, 0, 1, 0) - 5.0 / 3.0), 1e-12);
  const BargmannIndex k2(0.75);
  const DiskPoint w(0.3, 0.4);
  const GeneratorSet g = build_generators(k2, FockCutoff{80});
  CVector v = CVector::Zero(81);
  v.head(78) = coherent_state(k2, w, FockCutoff{77}).coeffs;
  CVector left = v, right = v;
  for (int i = 0; i < 2; ++i) left = g.ops.Kplus.matrix() * left;
  for (int i = 0; i < 3; ++i) right = g.ops.Kplus.matrix() * right;
  right = g.ops.K0.matrix() * right;
  const cd oracle = left.dot(right);
  s.check("K-^2 K0 K+^3 vs matrices M=80",
          std::abs(expectation_monomial(k2, w, 2, 1, 3) - oracle) / std::abs(oracle), 1e-9);
}

void v_expectation_generators(Sink& s) {
  const BargmannIndex k(1.0);
  const DiskPoint z(0.3, -0.45);
  const auto g = expectation_generators(k, z);
  s.check("pseudosphere radius k", std::abs(g.K0 * g.K0 - g.K1 * g.K1 - g.K2 * g.K2 - 1.0), 1e-12);
  const cd km = expectation_monomial(k, z, 1, 0, 0), kp = expectation_monomial(k, z, 0, 0, 1);
  s.check("K1 vs series", std::abs(0.5 * (kp + km) - g.K1), 1e-12);
  s.check("K0 vs series", std::abs(expectation_monomial(k, z, 0, 1, 0) - g.K0), 1e-12);
}

void v_resolution_of_unity(Sink& s) {
  const auto r = resolution_of_unity(BargmannIndex(1.0), DiskQuadrature(400, 64, 1e-8), FockCutoff{20}, 11);
  s.check("k=1 rows 0-10 deviation from identity", r.residual, 1e-6);
  s.check("k=1 off-diagonal", r.off_diagonal, 1e-12);
}

void v_k0_diagonal(Sink& s) {
  const auto r = k0_diagonal_representation(BargmannIndex(2.0), DiskQuadrature(400, 64, 1e-10), FockCutoff{12}, 9);
  s.check("k=2 rows 0-8 after fit", r.residual, 1e-6);
  s.check("fitted prefactor vs 4", std::abs(r.fitted_prefactor - 4.0), 1e-6);
  s.check("nominal prefactor 3/(4 pi)", std::abs(r.printed_prefactor - 3.0 / (4.0 * std::numbers::pi)), 1e-15);
}

// ---- optics

void v_one_mode(Sink& s) {
  const FockRealization r = one_mode_su11(BosonicTruncation{30});
  const CMatrix c = restrict_to(r.ops.C.matrix(), r.interior);
  s.check("Casimir = -3/16 interior", max_abs(CMatrix(c + 0.1875 * CMatrix::Identity(c.rows(), c.cols()))), 1e-12);
  s.check("commutators interior", commutator_residuals(r.ops, r.interior).max(), 1e-12);
  s.check("<0|K0|0> = 1/4", std::abs(r.ops.K0.matrix()(0, 0) - 0.25), 1e-15);
}

void v_parity_sector(Sink& s) {
  s.check("even sector N=20 vs k=1/4", parity_sector(BosonicTruncation{20}, Parity::even).deviation, 1e-12);
  s.check("odd sector N=20 vs k=3/4", parity_sector(BosonicTruncation{20}, Parity::odd).deviation, 1e-12);
}

void v_squeeze_one_mode(Sink& s) {
  const auto sq = squeeze_one_mode(0.5, BosonicTruncation{80});
  const auto even = parity_sector(BosonicTruncation{80}, Parity::even);
  const CVector sector = sq.image(even.sector.embedded_basis);
  const auto coh = coherent_state(BargmannIndex(0.25), DiskPoint(squeeze_to_disk(0.5)),
                                  FockCutoff{even.sector.embedded_basis.size() - 1});
  s.check("squeezed vacuum vs k=1/4 coherent state", fidelity_defect(sector, coh.coeffs), 1e-10);
  double odd = 0.0;
  for (Eigen::Index n = 1; n < 80; n += 2) odd = std::max(odd, std::abs(sq.image(n)));
  s.check("odd components", odd, 1e-13);
}

void v_displacement_and_coherent(Sink& s) {
  const auto d = displacement_and_coherent(1.0, BosonicTruncation{40});
  s.check("<0|D(1)|0> = exp(-1/2)", std::abs(d.image(0) - std::exp(-0.5)), 1e-12);
  s.check("components vs Glauber state", (d.image - glauber_state(1.0, BosonicTruncation{40})).cwiseAbs().maxCoeff(),
          1e-10);
}

void v_two_mode(Sink& s) {
  const TwoModeRealization r = two_mode_su11(BosonicTruncation{12});
  double worst = 0.0;
  for (int n0 = -11; n0 <= 11; ++n0) worst = std::max(worst, restrict_two_mode(r, n0).deviation);
  s.check("sectors vs build_generators N=12", worst, 1e-12);
  s.check("commutators on n_a, n_b <= N-2", commutator_residuals(r.realization.ops, r.realization.interior).max(),
          1e-12);
}

void v_squeeze_two_mode(Sink& s) {
  const BosonicTruncation n{40};
  const auto sq = squeeze_two_mode(0.4, n);
  const SectorDecomposition d = two_mode_sector(n, 0);
  const auto coh = coherent_state(BargmannIndex(0.5), DiskPoint(squeeze_to_disk(0.4)),
                                  FockCutoff{d.embedded_basis.size() - 1});
  s.check("two-mode squeezed vacuum vs k=1/2 coherent state",
          fidelity_defect(sq.image(d.embedded_basis), coh.coeffs), 1e-10);
}

// ---- geometry

void v_polar_disk(Sink& s) {
  const DiskPoint z = polar_to_disk({1.3, 0.7});
  const PolarCoords p = disk_to_polar(z);
  s.check("round trip", std::abs(p.tau - 1.3) + std::abs(p.phi - 0.7), 1e-13);
  s.check("|z| = tanh(tau/2)", std::abs(z.abs() - std::tanh(0.65)), 1e-15);
}

void v_embed_project(Sink& s) {
  const PseudospherePoint y = embed({0.9, -2.0}, 2.0);
  s.check("hyperboloid", std::abs(y.y1() * y.y1() + y.y2() * y.y2() - y.y0() * y.y0() + 4.0), 1e-12);
  const DiskPoint z = project(embed({0.9, -2.0}));
  s.check("projection inverts embedding", std::abs(z.value() - polar_to_disk({0.9, -2.0}).value()), 1e-15);
}

void v_isometries(Sink& s) {
  const LorentzMatrix l = isometry_rotation(0.4) * isometry_boost(1.2, -0.8) * isometry_reflection();
  s.check("Lambda Q Lambda^T - Q", lorentz_residual(l.matrix()), 1e-12);
}

void v_mobius(Sink& s) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double a = 2 * std::numbers::pi * u(rng), t = 2 * u(rng), b = 2 * std::numbers::pi * u(rng);
    const LorentzMatrix L = isometry_rotation(a) * isometry_boost(t, b);
    const MobiusTransform T = mobius_rotation(a) * mobius_boost(t, b);
    const DiskPoint z(std::polar(0.9 * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng)));
    const DiskPoint via3 = project(L.apply(embed(disk_to_polar(z))));
    worst = std::max(worst, std::abs(via3.value() - apply_mobius(T, z).value()));
  }
  s.check("2x2 vs 3x3 action on 200 points", worst, 1e-12);
}

void v_reflect(Sink& s) {
  const DiskPoint z(0.3, 0.4);
  s.check("conjugation", std::abs(reflect(z).value() - cd(0.3, -0.4)), 0.0);
  const DiskPoint via3 = project(isometry_reflection().apply(embed(disk_to_polar(z))));
  s.check("matches 3x3 reflection", std::abs(via3.value() - reflect(z).value()), 1e-15);
}

void v_geodesic_distance(Sink& s) {
  s.check("d(0, 0.5) = 2 artanh 0.5", std::abs(geodesic_distance(DiskPoint(), DiskPoint(0.5, 0.0)) - 2 * std::atanh(0.5)),
          1e-15);
  const MobiusTransform T = mobius_boost(0.8, 1.1) * mobius_rotation(-0.3);
  const DiskPoint a(0.2, -0.5), b(-0.6, 0.1);
  s.check("Mobius invariance",
          std::abs(geodesic_distance(a, b) - geodesic_distance(apply_mobius(T, a), apply_mobius(T, b))), 1e-12);
}

// ---- phase_space

void v_canonical_coordinates(Sink& s) {
  const BargmannIndex k(1.0);
  s.check("q(z=0.5) = 2/sqrt(3)", std::abs(canonical_from_disk(DiskPoint(0.5, 0.0), k).q - 2.0 / std::sqrt(3.0)),
          1e-15);
  const DiskPoint z(-0.4, 0.7);
  s.check("round trip", std::abs(disk_from_canonical(canonical_from_disk(z, k), k).value() - z.value()), 1e-13);
}

void v_classical_generators(Sink& s) {
  const BargmannIndex k(1.5);
  const DiskPoint z(0.25, -0.6);
  const auto c = classical_generators(canonical_from_disk(z, k), k);
  const auto e = expectation_generators(k, z);
  s.check("vs expectation_generators",
          std::max({std::abs(c.K0 - e.K0), std::abs(c.K1 - e.K1), std::abs(c.K2 - e.K2)}), 1e-12);
  s.check("K0^2 - K1^2 - K2^2 = k^2", std::abs(c.K0 * c.K0 - c.K1 * c.K1 - c.K2 * c.K2 - 2.25), 1e-12);
}

void v_poisson_bracket(Sink& s) {
  const BargmannIndex k(1.0);
  const DiskPoint z(0.3, 0.2);
  const auto K0 = generator_field(Generator::K0, k), K1 = generator_field(Generator::K1, k),
             K2 = generator_field(Generator::K2, k);
  s.check("{K1,K2} = K0", std::abs(poisson_bracket(K1, K2, z, k) - K0(z)), 1e-6);
  s.check("{K0,K1} = -K2", std::abs(poisson_bracket(K0, K1, z, k) + K2(z)), 1e-6);
  s.check("{K2,K0} = -K1", std::abs(poisson_bracket(K2, K0, z, k) + K1(z)), 1e-6);
}

void v_canonical_bracket(Sink& s) {
  const BargmannIndex k(1.0);
  const auto r = canonical_bracket_check(canonical_q_field(k), canonical_p_field(k), {0.4, -0.9}, k);
  s.check("{q,p} = 1 canonical", std::abs(r.canonical - 1.0), 1e-8);
  const auto g = canonical_bracket_check(generator_field(Generator::K1, k), generator_field(Generator::K2, k),
                                         {0.4, -0.9}, k);
  s.check("{K1,K2} canonical vs disk", g.difference, 1e-5);
}

// ---- hydrogen

void v_energy_level(Sink& s) {
  s.check("E(Z=1, n=1) = -1/2", std::abs(energy_level({1, 0, 0}) + 0.5), 0.0);
  s.check("E(Z=1, n=2) = -1/8", std::abs(energy_level({1, 0, 1}) + 0.125), 0.0);
}

void v_tilt_angle(Sink& s) {
  s.check("theta(-1/2) = ln 8", std::abs(tilt_angle(-0.5) - std::log(8.0)), 1e-14);
  s.check("K0 eigenvalue Z/sqrt(-2E) = n", std::abs(tilt_chain(1.0, energy_level({1, 1, 1})).k0_eigenvalue - 3.0),
          1e-12);
}

void v_differential(Sink& s) {
  const auto r = differential_commutator_residual(-0.75, YGrid(0.5, 10.0, 4000),
                                                  {[](double y) { return std::exp(-(y - 5.0) * (y - 5.0)); }});
  s.check("[K2, K0-K1] extrapolated, 4000 points", r.richardson.k2_k0_minus_k1, 1e-6);
  s.check("second-order ratio deviation", std::abs(r.coarse.max() / r.raw.max() - 4.0), 0.2);
}

void v_radial_reduction(Sink& s) {
  const auto r = radial_reduction_check(1.0, 0, -0.5, YGrid(0.5, 10.0, 4000));
  s.check("transformed equation Z=1 l=0", r.residual, 1e-6);
  s.check("operator combination", r.operator_residual, 1e-6);
  s.check("fitted a vs -3/4", std::abs(r.a_fitted + 0.75), 1e-6);
}

void v_radial_fd(Sink& s) {
  const auto sp = radial_fd_spectrum(1.0, 0, RadialGrid(1e-5, 60.0, 3000), 3);
  double worst = 0.0;
  for (int m = 0; m < 3; ++m) worst = std::max(worst, std::abs(sp.eigenvalues[m] - energy_level({1, 0, m})));
  s.check("FD vs energy_level Z=1 l=0 n<=3", worst, 1e-3);
}

// ---- symplectic

void v_is_symplectic(Sink& s) {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) worst = std::max(worst, is_symplectic(random_symplectic(1 + i % 3, rng)).residual);
  s.check("random exp(J H) accepted", worst, 1e-9);
  s.check("diag(2,2) rejected", is_symplectic(2.0 * RMatrix::Identity(2, 2)).symplectic ? 1.0 : 0.0, 0.0);
}

void v_vector_field(Sink& s) {
  const auto r = vector_field_check(8);
  s.check("exact residual, degree 8", std::max({r.k1k2, r.k0k1, r.k2k0}) + (r.exact_zero ? 0.0 : 1.0), 0.0);
}

void v_pauli(Sink& s) {
  const auto p = pauli_realization_check(1.0);
  s.check("exact residual", std::max({p.algebra.k1k2, p.algebra.k0k1, p.algebra.k2k0}) + (p.algebra.exact_zero ? 0.0 : 1.0),
          0.0);
  s.check("singular value e^(1/2) of exp(i K1)", std::abs(p.singular_values[0] - std::exp(0.5)), 1e-13);
}

// ---- cli

void v_cli_run(Sink& s) {
  std::ostringstream out, err;
  const int code = run({"cs", "expect", "--k", "1", "--z", "0.5", "--p", "0", "--q", "1", "--r", "0"}, out, err);
  const auto j = nlohmann::json::parse(out.str(), nullptr, false);
  const double v = j.is_object() && j.contains("value") ? j["value"].get<double>() : 0.0;
  s.check("cs expect <K0> at z=0.5", code == exit_ok ? std::abs(v - 5.0 / 3.0) : 1.0, 1e-12);
}

struct Hook {
  OpInfo info;
  void (*run)(Sink&);
};

constexpr std::array<Hook, op_count> hooks{{
    {{Op::build_generators, "algebra_core", "build_generators"}, v_build_generators},
    {{Op::commutator_residuals, "algebra_core", "commutator_residuals"}, v_commutator_residuals},
    {{Op::ladder_interior_residuals, "algebra_core", "ladder_interior_residuals"}, v_ladder_interior},
    {{Op::tilted_k0, "algebra_core", "tilted_k0"}, v_tilted_k0},
    {{Op::ladder_reconstruction_check, "algebra_core", "ladder_reconstruction_check"}, v_ladder},
    {{Op::coherent_state, "coherent_states", "coherent_state"}, v_coherent_state},
    {{Op::displacement_to_disk, "coherent_states", "displacement_to_disk"}, v_displacement_to_disk},
    {{Op::overlap, "coherent_states", "overlap"}, v_overlap},
    {{Op::expectation_monomial, "coherent_states", "expectation_monomial"}, v_expectation_monomial},
    {{Op::expectation_generators, "coherent_states", "expectation_generators"}, v_expectation_generators},
    {{Op::resolution_of_unity, "coherent_states", "resolution_of_unity"}, v_resolution_of_unity},
    {{Op::k0_diagonal_representation, "coherent_states", "k0_diagonal_representation"}, v_k0_diagonal},
    {{Op::one_mode_su11, "optics", "one_mode_su11"}, v_one_mode},
    {{Op::parity_sector, "optics", "parity_sector"}, v_parity_sector},
    {{Op::squeeze_one_mode, "optics", "squeeze_one_mode"}, v_squeeze_one_mode},
    {{Op::displacement_and_coherent, "optics", "displacement_and_coherent"}, v_displacement_and_coherent},
    {{Op::two_mode_su11, "optics", "two_mode_su11"}, v_two_mode},
    {{Op::squeeze_two_mode, "optics", "squeeze_two_mode"}, v_squeeze_two_mode},
    {{Op::polar_disk, "geometry", "polar_to_disk/disk_to_polar"}, v_polar_disk},
    {{Op::embed_project, "geometry", "embed/project"}, v_embed_project},
    {{Op::isometries, "geometry", "isometry_rotation/boost/reflection"}, v_isometries},
    {{Op::mobius, "geometry", "mobius_rotation/boost/apply_mobius"}, v_mobius},
    {{Op::reflect, "geometry", "reflect"}, v_reflect},
    {{Op::geodesic_distance, "geometry", "geodesic_distance"}, v_geodesic_distance},
    {{Op::canonical_coordinates, "phase_space", "canonical_from_disk/disk_from_canonical"}, v_canonical_coordinates},
    {{Op::classical_generators, "phase_space", "classical_generators"}, v_classical_generators},
    {{Op::poisson_bracket, "phase_space", "poisson_bracket"}, v_poisson_bracket},
    {{Op::canonical_bracket_check, "phase_space", "canonical_bracket_check"}, v_canonical_bracket},
    {{Op::energy_level, "hydrogen", "energy_level"}, v_energy_level},
    {{Op::tilt_angle, "hydrogen", "tilt_angle"}, v_tilt_angle},
    {{Op::differential_commutator_residual, "hydrogen", "differential_commutator_residual"}, v_differential},
    {{Op::radial_reduction_check, "hydrogen", "radial_reduction_check"}, v_radial_reduction},
    {{Op::radial_fd_spectrum, "hydrogen", "radial_fd_spectrum"}, v_radial_fd},
    {{Op::is_symplectic, "symplectic", "is_symplectic"}, v_is_symplectic},
    {{Op::vector_field_check, "symplectic", "vector_field_check"}, v_vector_field},
    {{Op::pauli_realization_check, "symplectic", "pauli_realization_check"}, v_pauli},
    {{Op::cli_run, "cli", "run"}, v_cli_run},
}};

constexpr bool hooks_complete() {
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    if (static_cast<std::size_t>(hooks[i].info.op) != i || hooks[i].run == nullptr) return false;
  }
  return true;
}
static_assert(hooks_complete(), "every operation needs exactly one verify hook, in enum order");

}  // namespace

const std::array<OpInfo, op_count>& operation_registry() {
  static const std::array<OpInfo, op_count> registry = [] {
    std::array<OpInfo, op_count> r{};
    for (std::size_t i = 0; i < op_count; ++i) r[i] = hooks[i].info;
    return r;
  }();
  return registry;
}

std::vector<CheckRow> run_verification() {
  std::vector<CheckRow> rows;
  Sink sink(rows);
  for (const Hook& h : hooks) {
    sink.begin(h.info);
    try {
      h.run(sink);
    } catch (const std::exception& e) {
      sink.fail(std::string("exception: ") + e.what());
    }
  }
  return rows;
}

Table verification_table(const std::vector<CheckRow>& rows) {
  Table t{{"module", "operation", "check", "value", "tolerance", "status"}, {}};
  for (const CheckRow& r : rows) {
    t.rows.push_back({r.module, r.operation, r.check, r.value, r.tolerance, r.passed ? "pass" : "FAIL"});
  }
  return t;
}

nlohmann::json verification_json(const std::vector<CheckRow>& rows) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t failed = 0;
  for (const CheckRow& r : rows) {
    checks.push_back({{"module", r.module},
                      {"operation", r.operation},
                      {"check", r.check},
                      {"value", r.value},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed}});
    if (!r.passed) ++failed;
  }
  return {{"checks", checks},
          {"operations", op_count},
          {"total", rows.size()},
          {"failed", failed},
          {"passed", rows.size() - failed}};
}

}  // namespace su11
