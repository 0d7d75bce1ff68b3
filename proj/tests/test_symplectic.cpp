#include <doctest.h>

#include <cmath>

#include "su11/error.hpp"
#include "su11/symplectic.hpp"

using namespace su11;
using cd = std::complex<double>;

TEST_CASE("standard J") {
  for (std::size_t N : {1, 2, 3}) {
    const RMatrix J = standard_j(N);
    const auto n = static_cast<Eigen::Index>(2 * N);
    CHECK((J * J + RMatrix::Identity(n, n)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((J.transpose() + J).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("is_symplectic") {
  const auto id = is_symplectic(RMatrix::Identity(4, 4));
  CHECK(id.symplectic);
  CHECK(id.residual == 0.0);

  RMatrix rot(2, 2);
  const double t = 0.7;
  rot << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  CHECK(is_symplectic(rot).symplectic);

  const RMatrix two = 2.0 * RMatrix::Identity(2, 2);
  const auto v = is_symplectic(two);
  CHECK_FALSE(v.symplectic);
  CHECK(v.residual == 3.0);  // S J S^T = 4J

  CHECK_THROWS_AS(is_symplectic(RMatrix::Identity(3, 3)), DomainError);
  CHECK_THROWS_AS(is_symplectic(RMatrix::Zero(2, 4)), DomainError);

  SUBCASE("random exponentials of Hamiltonian matrices") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t N = 1 + trial % 3;
      const RMatrix S = random_symplectic(N, rng);
      const auto ok = is_symplectic(S);
      CHECK(ok.symplectic);
      CHECK(std::abs(S.determinant() - 1.0) <= 1e-9);
      // Closed under products and inverses.
      const RMatrix T = random_symplectic(N, rng);
      CHECK(is_symplectic(RMatrix(S * T)).symplectic);
      CHECK(is_symplectic(RMatrix(S.inverse())).symplectic);
      // The inverse is -J S^T J.
      const RMatrix J = standard_j(N);
      CHECK((S.inverse() + J * S.transpose() * J).cwiseAbs().maxCoeff() <= 1e-9);
      // Perturbations are rejected.
      RMatrix P = S;
      const auto i = static_cast<Eigen::Index>(trial % P.rows());
      const auto j = static_cast<Eigen::Index>((trial / 3) % P.cols());
      P(i, j) += 1e-6 * (1.0 + std::abs(g(rng)));
      CHECK_FALSE(is_symplectic(P).symplectic);
    }
  }
}

TEST_CASE("vector-field realization") {
  const auto expected = su11_structure_constants();
  for (int degree : {1, 6, 8}) {
    const auto r = vector_field_check(degree);
    CHECK(r.exact_zero);
    CHECK(r.k1k2 == 0.0);
    CHECK(r.k0k1 == 0.0);
    CHECK(r.k2k0 == 0.0);
    CHECK(r.dimension == static_cast<std::size_t>((degree + 1) * (degree + 2) / 2));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) CHECK(r.structure[a][b][c] == expected[a][b][c]);
  }
  // 2i K0 (q) = p.
  const auto t = vector_field_action(0, 1, 0);
  cd total = 0.0;
  for (const auto& term : t) {
    if (term.coefficient == cd(0.0)) continue;
    CHECK(term.a == 0);
    CHECK(term.b == 1);
    total += term.coefficient;
  }
  CHECK(cd(0.0, 2.0) * total == cd(1.0, 0.0));
  // Linear fields preserve degree.
  for (int j = 0; j < 3; ++j)
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b)
        for (const auto& term : vector_field_action(j, a, b))
          if (term.coefficient != cd(0.0)) CHECK(term.a + term.b == a + b);
  CHECK_THROWS_AS(vector_field_check(9), DomainError);
}

TEST_CASE("Pauli realization") {
  const auto p = pauli_realization_check();
  CHECK(p.algebra.exact_zero);
  CHECK(p.k0_hermitian);
  CHECK(p.k1_antihermitian);
  CHECK(p.k2_antihermitian);
  // exp(i K1) = exp(-sigma_2 / 2) has singular values e^{+-1/2}.
  CHECK(p.singular_values[0] == doctest::Approx(std::exp(0.5)).epsilon(1e-13));
  CHECK(p.singular_values[1] == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
  CHECK(p.unitarity_defect > 0.1);
  // Same structure constants as the vector-field realization.
  const auto v = vector_field_check(4);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) CHECK(p.algebra.structure[a][b][c] == v.structure[a][b][c]);
  for (double t : {-2.0, 0.3, 1.5}) {
    const auto q = pauli_realization_check(t);
    CHECK(q.singular_values[0] == doctest::Approx(std::exp(std::abs(t) / 2)).epsilon(1e-12));
  }
  CHECK(pauli_realization_check(0.0).unitarity_defect <= 1e-15);
}
