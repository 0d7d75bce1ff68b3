#include <doctest.h>

#include <cmath>

#include "su11/algebra.hpp"
#include "su11/hydrogen.hpp"

using namespace su11;

namespace {

double gaussian(double y) { return std::exp(-(y - 5.0) * (y - 5.0)); }
double bump_mix(double y) { return (y - 4.0) * std::exp(-2.0 * (y - 5.5) * (y - 5.5)); }

}  // namespace

TEST_CASE("energy levels") {
  CHECK(energy_level({1, 0, 0}) == -0.5);
  CHECK(energy_level({1, 0, 1}) == -0.125);
  CHECK(energy_level({1, 2, 3}) == -1.0 / 72.0);
  // Z = 2: -Z^2/(2n^2); the alternative -Z/(2n^2) gives -0.25.
  CHECK(energy_level({2, 1, 0}) == -0.5);
  CHECK(printed_energy_level({2, 1, 0}) == -0.25);
  for (int n = 1; n <= 6; ++n) CHECK(energy_level({1, 0, n - 1}) == printed_energy_level({1, n - 1, 0}));
  CHECK_THROWS_AS(QuantumNumbers(0.0, 0, 0), DomainError);
  CHECK_THROWS_AS(QuantumNumbers(1.0, -1, 0), DomainError);
}

TEST_CASE("tilt angle") {
  const double ratio = -31.5 / -32.5;
  CHECK(std::abs(std::tanh(tilt_angle(-0.5)) - ratio) < 1e-15);
  // ratio = 63/65, so theta = artanh(63/65) = ln 8.
  CHECK(std::abs(tilt_angle(-0.5) - std::log(8.0)) < 1e-14);
  CHECK(std::abs(k0_eigenvalue(1.0, -0.5) - 1.0) < 1e-15);
  CHECK_THROWS_AS(tilt_angle(0.0), DomainError);
  CHECK_THROWS_AS(tilt_angle(0.3), DomainError);
  CHECK_THROWS_AS(tilt_angle(-1e-300), DomainError);

  SUBCASE("ratio inside (-1, 1) on a log-spaced sample") {
    for (double e = -1e6; e < -1e-12; e /= 1.7) {
      const double r = (64.0 * e + 0.5) / (64.0 * e - 0.5);
      CHECK(std::abs(r) < 1.0);
      CHECK(std::isfinite(tilt_angle(e)));
    }
    CHECK(tilt_angle(-1e-6) < tilt_angle(-1e-3));
  }
  SUBCASE("chain gives K0 eigenvalue n") {
    for (double Z : {1.0, 2.0, 3.5})
      for (int n = 1; n <= 5; ++n) {
        const double E = energy_level({Z, 0, n - 1});
        const TiltChain c = tilt_chain(Z, E);
        CHECK(c.chain_residual <= 1e-12 * c.scale * std::cosh(c.theta));
        CHECK(std::abs(c.scale - 8.0 * std::sqrt(-2.0 * E)) <= 1e-12 * c.scale);
        CHECK(std::abs(c.k0_eigenvalue - n) <= 1e-12 * n);
        CHECK(std::abs(k0_eigenvalue(Z, E) - n) <= 1e-12 * n);
      }
  }
  SUBCASE("matrix oracle: (1/2-64E) K0 + (1/2+64E) K1 has spectrum 8 sqrt(-2E) (k+m)") {
    // Positive discrete series with k = l + 1; the tridiagonal truncation converges
    // from above for the lowest levels.
    for (int l : {0, 1, 2}) {
      const double E = -0.002;
      const double A = 0.5 - 64.0 * E, B = 0.5 + 64.0 * E;
      const double k = l + 1.0;
      const GeneratorSet g = build_generators(BargmannIndex(k), FockCutoff{8});
      std::vector<double> diag, off;
      for (int m = 0; m <= 1500; ++m) diag.push_back(A * (k + m));
      for (int m = 0; m < 1500; ++m) off.push_back(B * 0.5 * std::sqrt((m + 1.0) * (2.0 * k + m)));
      for (int m = 0; m < 8; ++m) {
        CHECK(std::abs(diag[m] - A * g.ops.K0.matrix()(m, m).real()) < 1e-12);
        CHECK(std::abs(off[m] - B * g.ops.K1.matrix()(m + 1, m).real()) < 1e-12);
      }
      const auto ev = tridiagonal_lowest_eigenvalues(diag, off, 3);
      const double scale = 8.0 * std::sqrt(-2.0 * E);
      for (int m = 0; m < 3; ++m) CHECK(ev[m] == doctest::Approx(scale * (l + 1 + m)).epsilon(1e-8));
    }
  }
}

TEST_CASE("differential realization commutators") {
  const YGrid grid(0.5, 10.0, 4000);
  const auto res = differential_commutator_residual(-0.75, grid, {gaussian, bump_mix});
  CHECK(res.richardson.k2_k0_minus_k1 <= 1e-6);
  CHECK(res.richardson.max() <= 1e-6);
  CHECK(res.raw.k2_k0_minus_k1 <= 1e-4);
  // Second order: doubling the spacing multiplies the residual by about 4.
  for (auto [fine, coarse] : {std::pair{res.raw.k1k2, res.coarse.k1k2}, std::pair{res.raw.k0k1, res.coarse.k0k1},
                              std::pair{res.raw.k2k0, res.coarse.k2k0},
                              std::pair{res.raw.k2_k0_minus_k1, res.coarse.k2_k0_minus_k1}}) {
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
  }
  SUBCASE("grid halving") {
    double previous = 0.0;
    for (std::size_t n : {1000, 2000, 4000, 8000}) {
      const double r = differential_commutator_residual(0.3, YGrid(0.5, 10.0, n), {gaussian}).raw.max();
      if (previous > 0.0) CHECK(previous / r == doctest::Approx(4.0).epsilon(0.1));
      previous = r;
    }
  }
  SUBCASE("support touching the boundary is rejected") {
    CHECK_THROWS_AS(differential_commutator_residual(0.0, grid, {[](double y) { return std::exp(-y); }}),
                    DomainError);
  }
  SUBCASE("constant-coefficient sanity: [d2/dy2, y d/dy] = 2 d2/dy2") {
    // On monomials y^p the stencils are exact for p <= 3, so the identity holds to roundoff.
    const YGrid g(0.5, 2.0, 201);
    const double h = g.spacing();
    for (int p = 0; p <= 3; ++p) {
      CVector f(201), yv(201);
      for (Eigen::Index j = 0; j < 201; ++j) {
        yv(j) = g.at(static_cast<std::size_t>(j));
        f(j) = std::pow(yv(j).real(), p);
      }
      auto ydy = [&](const CVector& v) { return CVector(yv.cwiseProduct(fd::first_derivative(v, h))); };
      const CVector lhs = fd::second_derivative(ydy(f), h) - ydy(fd::second_derivative(f, h));
      const CVector rhs = 2.0 * fd::second_derivative(f, h);
      for (Eigen::Index j = 2; j < 199; ++j) {
        CHECK(std::abs(lhs(j) - rhs(j)) <= 1e-8);
        // Analytic value 2 p (p-1) y^(p-2).
        CHECK(std::abs(rhs(j) - (p >= 2 ? 2.0 * p * (p - 1) * std::pow(yv(j).real(), p - 2) : 0.0)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("radial reduction") {
  const YGrid grid(0.5, 10.0, 4000);
  const auto r = radial_reduction_check(1.0, 0, -0.5, grid);
  CHECK(r.residual <= 1e-6);
  CHECK(std::abs(r.operator_residual - r.residual) <= 1e-9);
  CHECK(r.combination_identity == 0.0);
  CHECK(r.y2_coefficient == doctest::Approx(8.0 * -0.5));
  CHECK(r.a_fitted == doctest::Approx(-0.75).epsilon(1e-6));
  CHECK(r.z_coefficient_fitted == doctest::Approx(8.0).epsilon(1e-6));
  CHECK(r.printed_residual > 1.0);

  for (int l : {1, 2, 3}) {
    const double Z = 1.5;
    const double E = energy_level({Z, l, 0});
    const auto s = radial_reduction_check(Z, l, E, YGrid(0.3, 8.0, 6000));
    CHECK(s.residual <= 1e-5 * std::max(1.0, std::abs(s.a_used)));
    CHECK(s.a_fitted == doctest::Approx(-4.0 * l * (l + 1) - 0.75).epsilon(1e-6));
    CHECK(s.z_coefficient_fitted == doctest::Approx(8.0 * Z).epsilon(1e-6));
    CHECK(s.a_printed == 0.75 - 4.0 * l * (l + 1));
  }
  // Wrong energy leaves a residual.
  CHECK(radial_reduction_check(1.0, 0, -0.3, grid).residual > 1e-2);
}

TEST_CASE("finite-difference radial spectrum") {
  const RadialGrid grid(1e-5, 60.0, 3000);
  const auto s0 = radial_fd_spectrum(1.0, 0, grid, 3);
  CHECK(std::abs(s0.eigenvalues[0] - energy_level({1, 0, 0})) <= 1e-3);
  CHECK(std::abs(s0.eigenvalues[1] - energy_level({1, 0, 1})) <= 1e-3);
  CHECK(std::abs(s0.eigenvalues[2] - energy_level({1, 0, 2})) <= 1e-3);
  const auto s1 = radial_fd_spectrum(1.0, 1, grid, 2);
  CHECK(std::abs(s1.eigenvalues[0] + 0.125) <= 1e-3);
  CHECK(std::abs(s1.eigenvalues[0] - s0.eigenvalues[1]) <= 1e-3);
  CHECK(std::abs(s1.eigenvalues[1] - s0.eigenvalues[2]) <= 1e-3);

  SUBCASE("Z scaling and monotone convergence") {
    for (double Z : {1.0, 2.0}) {
      double previous = 1e300;
      for (std::size_t n : {1000, 2000, 4000, 8000}) {
        const auto s = radial_fd_spectrum(Z, 0, RadialGrid(1e-5, 40.0 / Z, n), 1, 1.0);
        const double err = std::abs(s.eigenvalues[0] - energy_level({Z, 0, 0}));
        CHECK(err < previous);
        previous = err;
      }
      CHECK(previous <= 1e-4 * Z * Z);
    }
  }
  CHECK_THROWS_AS(radial_fd_spectrum(1.0, 0, RadialGrid(1e-5, 60.0, 60), 2), ConvergenceError);
  CHECK_THROWS_AS(RadialGrid(0.0, 1.0, 10), DomainError);
}
