#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "su11/coherent.hpp"
#include "su11/geometry.hpp"

using namespace su11;
using cd = std::complex<double>;

namespace {

DiskPoint random_disk(std::mt19937& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return DiskPoint(std::polar(rmax * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)));
}

// <v| K-^p K0^q K+^r |v> = (K+^p v)^H K0^q (K+^r v), exact when v lives on the
// first dim - max(p, r) states.
cd matrix_monomial(const GeneratorSet& g, const CVector& v, unsigned p, unsigned q, unsigned r) {
  CVector left = v, right = v;
  for (unsigned i = 0; i < p; ++i) left = g.ops.Kplus.matrix() * left;
  for (unsigned i = 0; i < r; ++i) right = g.ops.Kplus.matrix() * right;
  for (unsigned i = 0; i < q; ++i) right = g.ops.K0.matrix() * right;
  return left.dot(right);
}

CVector padded_state(double k, DiskPoint z, std::size_t support, std::size_t dim) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v.head(static_cast<Eigen::Index>(support + 1)) = coherent_state(BargmannIndex(k), z, FockCutoff{support}).coeffs;
  return v;
}

}  // namespace

TEST_CASE("coherent_state coefficients") {
  SUBCASE("lowest state at z = 0") {
    const auto s = coherent_state(BargmannIndex(1.0), DiskPoint(0.0, 0.0), FockCutoff{5});
    CHECK(s.coeffs(0) == cd(1.0));
    for (int m = 1; m <= 5; ++m) CHECK(s.coeffs(m) == cd(0.0));
    CHECK(s.tail_deficit == doctest::Approx(0.0));
    CHECK(s.tail_bound == 0.0);
  }
  SUBCASE("k=1, z=0.5 closed form") {
    const auto s = coherent_state(BargmannIndex(1.0), DiskPoint(0.5, 0.0), FockCutoff{1});
    CHECK(std::abs(s.coeffs(0) - 0.75) < 1e-15);
    CHECK(std::abs(s.coeffs(1) - 0.75 * std::sqrt(2.0) * 0.5) < 1e-15);
    CHECK(std::abs(s.coeffs(1) - 0.530330085889911) < 1e-12);
  }
  SUBCASE("phases follow z^m") {
    const DiskPoint z(cd(0.3, -0.4));
    const auto s = coherent_state(BargmannIndex(1.5), z, FockCutoff{6});
    for (int m = 1; m <= 6; ++m) {
      CHECK(std::abs(s.coeffs(m) / s.coeffs(m - 1) / z.value() - std::sqrt((3.0 + m - 1) / m)) < 1e-12);
    }
  }
  SUBCASE("deficit decreases in M and is covered by the tail bound") {
    for (double k : {0.25, 0.5, 1.0, 3.0, 10.0}) {
      for (double r : {0.2, 0.6, 0.9}) {
        double previous = 2.0;
        for (std::size_t M = 1; M < 200; M += 7) {
          const auto s = coherent_state(BargmannIndex(k), DiskPoint(r, 0.0), FockCutoff{M});
          CHECK(s.tail_deficit <= previous + 1e-15);
          previous = s.tail_deficit;
          CHECK(s.tail_bound >= s.tail_deficit - 1e-14);
          // Bound is tight enough to be useful: within a factor of 1/(1 - r^2) of
          // the exact tail once it is resolved in double precision.
          if (s.tail_deficit > 1e-10) CHECK(s.tail_bound <= s.tail_deficit / (1.0 - r * r) * 1.01 + 1e-14);
        }
      }
    }
  }
  SUBCASE("tail flag") {
    const auto short_state = coherent_state(BargmannIndex(1.0), DiskPoint(0.9, 0.0), FockCutoff{10}, 1e-10);
    CHECK(short_state.tail_flagged);
    const auto long_state = coherent_state(BargmannIndex(1.0), DiskPoint(0.5, 0.0), FockCutoff{80}, 1e-10);
    CHECK_FALSE(long_state.tail_flagged);
  }
  SUBCASE("|z| >= 1 rejected") { CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError); }
}

TEST_CASE("displacement_to_disk") {
  CHECK(displacement_to_disk(0.0).value() == cd(0.0));
  CHECK(std::abs(displacement_to_disk(1.0).value() - 0.761594155955765) < 1e-12);
  CHECK(std::abs(displacement_to_disk(cd(0.0, 0.3)).value() - cd(0.0, 0.291312612451591)) < 1e-12);

  SUBCASE("matrix displacement of |k,0> reproduces the coherent state") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double k : {0.5, 1.0, 2.5}) {
      for (int trial = 0; trial < 4; ++trial) {
        const cd zeta = trial == 0 ? cd(0.0, 0.3) : cd(u(rng), u(rng));
        const std::size_t M = 200;
        const auto d = su11_displacement(BargmannIndex(k), zeta, FockCutoff{M});
        const CVector moved = d.matrix().col(0);
        const auto s = coherent_state(BargmannIndex(k), displacement_to_disk(zeta), FockCutoff{M});
        INFO("k=" << k << " zeta=" << zeta << " fid-1=" << std::norm(s.coeffs.dot(moved)) - 1.0);
        CHECK(std::norm(s.coeffs.dot(moved)) >= 1.0 - 1e-10);
        CHECK((moved.head(20) - s.coeffs.head(20)).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("overlap") {
  const BargmannIndex k1(1.0);
  const DiskPoint a(0.5, 0.0), b(0.0, 0.5);
  const cd expected = 0.75 * 0.75 / std::pow(1.0 - cd(0.0, 0.25), 2);
  CHECK(std::abs(overlap(k1, a, b) - expected) < 1e-15);
  const CVector ca = coherent_state(k1, a, FockCutoff{60}).coeffs;
  const CVector cb = coherent_state(k1, b, FockCutoff{60}).coeffs;
  CHECK(std::abs(ca.dot(cb) - expected) <= 1e-12);

  CHECK(std::abs(overlap(k1, a, a) - 1.0) < 1e-15);
  const DiskPoint z(cd(0.2, 0.7));
  CHECK(std::abs(overlap(BargmannIndex(2.5), DiskPoint(), z) - std::pow(1.0 - z.norm2(), 2.5)) < 1e-15);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const double k = 0.25 + 0.5 * (trial % 9);
    const DiskPoint z1 = random_disk(rng, 0.8), z2 = random_disk(rng, 0.8);
    const BargmannIndex kk(k);
    const cd o12 = overlap(kk, z1, z2), o21 = overlap(kk, z2, z1);
    CHECK(std::abs(o12 - std::conj(o21)) < 1e-13);
    CHECK(std::norm(o12) <= 1.0 + 1e-14);
    CHECK(std::norm(o12) < 1.0 - 1e-9);
    const auto s1 = coherent_state(kk, z1, FockCutoff{400});
    const auto s2 = coherent_state(kk, z2, FockCutoff{400});
    const double tail = std::sqrt(s1.tail_bound * s2.tail_bound);
    CHECK(std::abs(s1.coeffs.dot(s2.coeffs) - o12) <= tail + 1e-12);
  }
}

TEST_CASE("expectation_monomial") {
  const BargmannIndex k1(1.0);
  const DiskPoint half(0.5, 0.0);
  CHECK(std::abs(expectation_monomial(k1, half, 1, 0, 0) - 4.0 / 3.0) < 1e-14);
  CHECK(std::abs(expectation_monomial(k1, half, 0, 1, 0) - 5.0 / 3.0) < 1e-14);

  SUBCASE("normalization") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const BargmannIndex k(0.1 + 0.3 * trial);
      CHECK(std::abs(expectation_monomial(k, random_disk(rng, 0.9), 0, 0, 0) - 1.0) < 1e-13);
    }
  }
  SUBCASE("z = 0 reduces to the lowest state") {
    const BargmannIndex k(0.75);
    CHECK(std::abs(expectation_monomial(k, DiskPoint(), 0, 3, 0) - std::pow(0.75, 3)) < 1e-15);
    CHECK(std::abs(expectation_monomial(k, DiskPoint(), 2, 1, 2) - 2.0 * 1.5 * 2.5 * 2.75) < 1e-13);
    CHECK(expectation_monomial(k, DiskPoint(), 2, 1, 1) == cd(0.0));
  }
  SUBCASE("matrix-product oracle") {
    std::mt19937 rng(17);
    const std::size_t M = 80;
    for (double k : {0.75, 1.0, 2.5}) {
      const GeneratorSet g = build_generators(BargmannIndex(k), FockCutoff{M});
      for (int trial = 0; trial < 3; ++trial) {
        const DiskPoint z = random_disk(rng, 0.6);
        const CVector v = padded_state(k, z, M - 3, M + 1);
        for (unsigned p = 0; p <= 3; ++p)
          for (unsigned q = 0; q <= 3; ++q)
            for (unsigned r = 0; r <= 3; ++r) {
              const cd series = expectation_monomial(BargmannIndex(k), z, p, q, r);
              const cd matrix = matrix_monomial(g, v, p, q, r);
              CHECK(std::abs(series - matrix) <= 1e-9 * std::max(1.0, std::abs(matrix)));
            }
      }
    }
  }
  SUBCASE("adjoint monomial is the conjugate") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const BargmannIndex k(0.3 + 0.2 * trial);
      const DiskPoint z = random_disk(rng, 0.85);
      const unsigned p = trial % 4, q = (trial / 4) % 3, r = (trial / 12) % 4;
      const cd a = expectation_monomial(k, z, p, q, r), b = expectation_monomial(k, z, r, q, p);
      CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a) + 1e-300);
    }
  }
  SUBCASE("term cap reports the partial sum") {
    const DiskPoint edge(1.0 - 1e-9, 0.0);
    SeriesOptions opts;
    opts.term_cap = 1000;
    try {
      (void)expectation_monomial(k1, edge, 0, 1, 0, opts);
      FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
      CHECK(e.partial() > 0.0);
    }
  }
}

TEST_CASE("expectation_generators") {
  const auto origin = expectation_generators(BargmannIndex(1.5), DiskPoint());
  CHECK(origin.K1 == doctest::Approx(0.0));
  CHECK(origin.K2 == doctest::Approx(0.0));
  CHECK(origin.K0 == doctest::Approx(1.5));

  const auto half = expectation_generators(BargmannIndex(1.0), DiskPoint(0.5, 0.0));
  CHECK(std::abs(half.K0 - 5.0 / 3.0) < 1e-14);
  CHECK(std::abs(half.K1 - std::sinh(2.0 * std::atanh(0.5))) < 1e-14);
  CHECK(std::abs(half.K2) < 1e-15);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const double k = 0.25 + 0.125 * (trial % 30);
    const BargmannIndex kk(k);
    const DiskPoint z = random_disk(rng, 0.9);
    const auto g = expectation_generators(kk, z);
    CHECK(std::abs(g.K0 * g.K0 - g.K1 * g.K1 - g.K2 * g.K2 - k * k) <= 1e-12 * g.K0 * g.K0);
    // Series route: K1 = (K+ + K-)/2, K2 = (K+ - K-)/(2i).
    const cd kminus = expectation_monomial(kk, z, 1, 0, 0);
    const cd kplus = expectation_monomial(kk, z, 0, 0, 1);
    const double scale = 1e-12 * g.K0;
    CHECK(std::abs(0.5 * (kplus + kminus) - g.K1) <= scale);
    CHECK(std::abs(expectation_monomial(kk, z, 0, 1, 0) - g.K0) <= scale);
    // The state sum_m z^m |k,m> carries <K2> = -2k Im z / (1-|z|^2), the value
    // of the pseudosphere component at conj(z).
    const cd k2 = (kplus - kminus) / cd(0.0, 2.0);
    CHECK(std::abs(k2 + g.K2) <= scale);
    CHECK(std::abs(k2 - expectation_generators(kk, DiskPoint(std::conj(z.value()))).K2) <= scale);
  }
}

TEST_CASE("resolution_of_unity") {
  SUBCASE("k=1 reference configuration") {
    const auto res = resolution_of_unity(BargmannIndex(1.0), DiskQuadrature(400, 64, 1e-8), FockCutoff{20}, 11);
    CHECK(res.checked_rows == 11);
    CHECK(res.residual <= 1e-6);
    CHECK(res.off_diagonal <= 1e-12);
  }
  SUBCASE("incomplete-Beta oracle for the truncated radial integral") {
    // diag_m = (2k-1) a_m^2 B(m+1, 2k-1) I_{1-eps}(m+1, 2k-1).
    for (double k : {1.0, 1.5, 2.0, 3.0}) {
      const double eps = 1e-3;
      const auto res = resolution_of_unity(BargmannIndex(k), DiskQuadrature(200, 40, eps), FockCutoff{12}, 13);
      for (int m = 0; m <= 12; ++m) {
        const double full = std::exp(std::lgamma(2 * k + m) - std::lgamma(m + 1.0) - std::lgamma(2 * k)) *
                            (2 * k - 1) * std::exp(std::lgamma(m + 1.0) + std::lgamma(2 * k - 1) - std::lgamma(2 * k + m));
        CHECK(full == doctest::Approx(1.0).epsilon(1e-12));
        const double oracle = full * boost::math::ibeta(m + 1.0, 2 * k - 1, 1.0 - eps);
        const double tol = k == std::floor(k) ? 1e-12 : 1e-4;
        CHECK(std::abs(res.matrix(m, m).real() - oracle) <= tol);
      }
      CHECK(res.off_diagonal <= 1e-12);
    }
  }
  SUBCASE("residual does not grow under radial refinement") {
    double previous = 1e300;
    for (std::size_t n : {25, 50, 100, 200, 400}) {
      const auto res = resolution_of_unity(BargmannIndex(0.9), DiskQuadrature(n, 24, 1e-10), FockCutoff{8}, 4);
      CHECK(res.residual <= previous * 1.05 + 1e-12);
      previous = res.residual;
    }
  }
  SUBCASE("automatic row selection respects the cutoff bias") {
    const auto res = resolution_of_unity(BargmannIndex(1.0), DiskQuadrature(300, 64, 1e-8), FockCutoff{20});
    CHECK(res.checked_rows == 21);
    CHECK(res.cutoff_bias <= 1e-6);
  }
  CHECK_THROWS_AS(resolution_of_unity(BargmannIndex(0.5), DiskQuadrature(10, 10, 1e-3), FockCutoff{3}), DomainError);
  CHECK_THROWS_AS(DiskQuadrature(0, 10, 1e-3), DomainError);
  CHECK_THROWS_AS(DiskQuadrature(10, 10, 1.0), DomainError);
}

TEST_CASE("k0_diagonal_representation") {
  const auto res = k0_diagonal_representation(BargmannIndex(2.0), DiskQuadrature(400, 64, 1e-10), FockCutoff{12}, 9);
  CHECK(res.off_diagonal <= 1e-12);
  CHECK(res.residual <= 1e-6);
  // The nominal integrand integrates to K0 / 4.
  CHECK(res.fitted_prefactor == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(res.printed_prefactor == doctest::Approx(3.0 / (4.0 * std::numbers::pi)));
  const auto finer = k0_diagonal_representation(BargmannIndex(2.0), DiskQuadrature(800, 64, 1e-10), FockCutoff{12}, 9);
  CHECK(std::abs(finer.fitted_prefactor - res.fitted_prefactor) <= 5e-4 * res.fitted_prefactor);

  const auto k3 = k0_diagonal_representation(BargmannIndex(3.5), DiskQuadrature(400, 64, 1e-10), FockCutoff{10}, 8);
  CHECK(k3.fitted_prefactor == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(k3.residual <= 1e-6);
  CHECK_THROWS_AS(k0_diagonal_representation(BargmannIndex(1.0), DiskQuadrature(10, 10, 1e-3), FockCutoff{3}, 2),
                  DomainError);
}
