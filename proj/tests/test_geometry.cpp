#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "su11/geometry.hpp"
#include "su11/quadrature.hpp"

using namespace su11;
using std::numbers::pi;

namespace {

DiskPoint random_disk(std::mt19937& rng, double rmax = 0.9) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return DiskPoint(std::polar(rmax * std::sqrt(u(rng)), 2.0 * pi * u(rng)));
}

double dist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

// Matched 3x3 / 2x2 pairs of random rotations and boosts and their products.
struct Pair {
  LorentzMatrix lorentz;
  MobiusTransform mobius;
};

Pair random_pair(std::mt19937& rng) {
  std::uniform_real_distribution<double> ang(-pi, pi);
  std::uniform_real_distribution<double> rap(0.0, 2.0);
  const double a = ang(rng), b = ang(rng), t = rap(rng);
  return {isometry_rotation(a) * isometry_boost(t, b), mobius_rotation(a) * mobius_boost(t, b)};
}

// Smooth bump with compact support |z - c| < rho.
double bump(std::complex<double> z, std::complex<double> c, double rho) {
  const double s = std::norm(z - c) / (rho * rho);
  return s < 1.0 ? std::exp(-1.0 / (1.0 - s)) : 0.0;
}

// Integral of f(z) / (1 - |z|^2)^2 over |z| < rmax in polar coordinates.
template <class F>
double disk_integral(F f, double rmax, std::size_t nr, std::size_t nphi) {
  const auto rr = gauss_legendre(nr, 0.0, rmax);
  const auto ph = periodic_trapezoid(nphi);
  double s = 0.0;
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nphi; ++j) {
      const DiskPoint z(std::polar(rr.nodes[i], ph.nodes[j]));
      s += rr.weights[i] * ph.weights[j] * rr.nodes[i] * f(z) * area_weight(z);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("polar and disk coordinates") {
  CHECK(polar_to_disk({0.0, 1.234}).value() == std::complex<double>(0.0, 0.0));
  const DiskPoint z = polar_to_disk({2.0 * std::atanh(0.5), pi / 2.0});
  CHECK(dist(z.value(), {0.0, 0.5}) <= 1e-15);
  CHECK_THROWS_AS(polar_to_disk({-0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);

  std::mt19937 rng(1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_disk(rng);
    worst = std::max(worst, dist(polar_to_disk(disk_to_polar(p)).value(), p.value()));
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("embedding and stereographic projection") {
  const auto pole = embed({0.0, 0.3});
  CHECK(pole.y0() == 1.0);
  CHECK(project(pole).value() == std::complex<double>(0.0, 0.0));

  const auto p = embed({1.0, 0.0});
  CHECK(p.y1() == doctest::Approx(1.175201).epsilon(1e-6));
  CHECK(p.y2() == 0.0);
  CHECK(p.y0() == doctest::Approx(1.543081).epsilon(1e-6));

  CHECK_THROWS_AS(PseudospherePoint(0.5, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(PseudospherePoint(0.0, 0.0, -1.0), DomainError);

  std::mt19937 rng(2);
  std::uniform_real_distribution<double> tau(0.0, 4.0), phi(-pi, pi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PolarCoords pc{tau(rng), phi(rng)};
    const double R = 0.5 + i % 3;
    const auto e = embed(pc, R);
    const std::complex<double> stereo = std::complex<double>(e.y1(), e.y2()) / (R + e.y0());
    worst = std::max(worst, dist(stereo, std::polar(std::tanh(pc.tau / 2.0), pc.phi)));
    worst = std::max(worst, dist(project(e).value(), polar_to_disk(pc).value()));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("isometries in the 3x3 form") {
  CHECK((isometry_rotation(0.0).matrix() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() == 0.0);

  const double t = 0.8;
  Eigen::Matrix3d b;
  b << 1, 0, 0, 0, std::cosh(t), std::sinh(t), 0, std::sinh(t), std::cosh(t);
  CHECK((isometry_boost(t, pi / 2.0).matrix() - b).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::Matrix3d c = isometry_reflection().matrix();
  CHECK((c * c - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() == 0.0);

  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto pr = random_pair(rng);
    CHECK(lorentz_residual(pr.lorentz.matrix()) <= 1e-12 * std::pow(pr.lorentz.matrix()(2, 2), 2));
    CHECK(pr.lorentz.matrix()(2, 2) > 0.0);
    const auto image = pr.lorentz.apply(embed({1.0, 0.4}));
    CHECK(image.y0() > 0.0);
  }
  Eigen::Matrix3d bad = Eigen::Matrix3d::Identity();
  bad(2, 2) = -1.0;
  CHECK_THROWS_AS(LorentzMatrix{bad}, DomainError);
}

TEST_CASE("Mobius action") {
  CHECK(dist(apply_mobius(mobius_rotation(pi / 2.0), DiskPoint(0.3, 0.0)).value(), {0.0, 0.3}) <= 1e-15);
  for (double tau0 : {0.1, 1.0, 2.5}) {
    for (double phi0 : {0.0, 1.0, -2.0}) {
      const DiskPoint img = apply_mobius(mobius_boost(tau0, phi0), DiskPoint(0.0, 0.0));
      CHECK(dist(img.value(), std::polar(std::tanh(tau0 / 2.0), phi0)) <= 1e-15);
    }
  }
  CHECK_THROWS_AS(MobiusTransform(1.0, 0.5), DomainError);

  std::mt19937 rng(4);
  double worst_action = 0.0, worst_compose = 0.0, worst_det = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto pr = random_pair(rng);
    const DiskPoint z = random_disk(rng, 0.8);
    const DiskPoint via3 = project(pr.lorentz.apply(embed(disk_to_polar(z))));
    const DiskPoint via2 = apply_mobius(pr.mobius, z);
    CHECK(via2.abs() < 1.0);
    worst_action = std::max(worst_action, dist(via3.value(), via2.value()));

    const auto other = random_pair(rng);
    const auto prod = pr.mobius * other.mobius;
    worst_compose = std::max(
        worst_compose, dist(apply_mobius(prod, z).value(), apply_mobius(pr.mobius, apply_mobius(other.mobius, z)).value()));
    worst_det = std::max(worst_det, std::fabs(std::norm(prod.alpha()) - std::norm(prod.beta()) - 1.0) /
                                        std::norm(prod.alpha()));
  }
  CHECK(worst_action <= 1e-12);
  CHECK(worst_compose <= 1e-12);
  CHECK(worst_det <= 1e-12);
}

TEST_CASE("reflection") {
  CHECK(reflect(DiskPoint(0.4, 0.0)).value() == std::complex<double>(0.4, 0.0));
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const DiskPoint z = random_disk(rng);
    CHECK(reflect(reflect(z)).value() == z.value());
    const DiskPoint via3 = project(isometry_reflection().apply(embed(disk_to_polar(z))));
    CHECK(dist(via3.value(), reflect(z).value()) <= 1e-13);
  }
}

TEST_CASE("geodesic distance") {
  const DiskPoint o(0.0, 0.0);
  CHECK(geodesic_distance(o, DiskPoint(0.5, 0.0)) == doctest::Approx(1.098612).epsilon(1e-6));
  CHECK(geodesic_distance(o, DiskPoint(0.5, 0.0)) == doctest::Approx(2.0 * std::atanh(0.5)).epsilon(1e-15));

  std::mt19937 rng(6);
  double worst_inv = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint a = random_disk(rng, 0.8), b = random_disk(rng, 0.8), c = random_disk(rng, 0.8);
    CHECK(geodesic_distance(a, a) == 0.0);
    CHECK(geodesic_distance(a, b) == doctest::Approx(geodesic_distance(b, a)).epsilon(1e-14));
    CHECK(geodesic_distance(a, c) <= geodesic_distance(a, b) + geodesic_distance(b, c) + 1e-12);
    CHECK(geodesic_distance(o, a) == doctest::Approx(disk_to_polar(a).tau).epsilon(1e-13));
    const auto t = random_pair(rng).mobius;
    worst_inv = std::max(worst_inv, std::fabs(geodesic_distance(a, b) -
                                              geodesic_distance(apply_mobius(t, a), apply_mobius(t, b))));
    worst_inv = std::max(worst_inv, std::fabs(geodesic_distance(a, b) - geodesic_distance(reflect(a), reflect(b))));
  }
  CHECK(worst_inv <= 1e-12);
}

TEST_CASE("metric pullback carries the factor 4 of the embedding metric") {
  // ds^2 = dtau^2 + sinh^2(tau) dphi^2 pulls back to 4 |dz|^2 / (1 - |z|^2)^2.
  for (auto zc : {std::complex<double>(0.0, 0.0), {0.3, -0.2}, {-0.6, 0.5}}) {
    const DiskPoint z(zc);
    const std::complex<double> delta = std::polar(1e-6, 0.7);
    const double d = geodesic_distance(z, DiskPoint(zc + delta));
    const double ratio = d * d * std::pow(1.0 - z.norm2(), 2) / std::norm(delta);
    CHECK(ratio == doctest::Approx(4.0).epsilon(1e-5));
  }
}

TEST_CASE("area weight is Mobius invariant") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto t = random_pair(rng).mobius;
    const DiskPoint z = random_disk(rng, 0.8);
    const double jac = std::norm(t.derivative(z));
    CHECK(jac * area_weight(apply_mobius(t, z)) == doctest::Approx(area_weight(z)).epsilon(1e-12));
  }
  // Quadrature of a compactly supported bump and of its pullback.
  const std::complex<double> c(0.3, 0.0);
  const double rho = 0.3;
  const MobiusTransform t = mobius_boost(0.6, 1.0);
  const double plain = disk_integral([&](DiskPoint z) { return bump(z.value(), c, rho); }, 0.95, 400, 400);
  const double pulled =
      disk_integral([&](DiskPoint z) { return bump(apply_mobius(t, z).value(), c, rho); }, 0.95, 400, 400);
  CHECK(plain > 0.01);
  CHECK(std::fabs(plain - pulled) <= 1e-6);
}

TEST_CASE("geodesic arc samples") {
  const auto arc = geodesic_arc(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0), 5);
  REQUIRE(arc.size() == 5);
  CHECK(arc.back().s == doctest::Approx(2.0 * std::atanh(0.5)));
  for (const auto& a : arc) CHECK(std::fabs(a.z.value().imag()) <= 1e-15);
  // Off-centre arcs: consecutive samples equally spaced in distance and ending at b.
  const DiskPoint a(0.2, 0.5), b(-0.4, -0.1);
  const auto arc2 = geodesic_arc(a, b, 9);
  CHECK(dist(arc2.back().z.value(), b.value()) <= 1e-13);
  const double step = geodesic_distance(a, b) / 8.0;
  for (std::size_t i = 1; i < arc2.size(); ++i) {
    CHECK(geodesic_distance(arc2[i - 1].z, arc2[i].z) == doctest::Approx(step).epsilon(1e-10));
  }
}
