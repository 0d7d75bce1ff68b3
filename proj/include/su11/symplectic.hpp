#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <random>

#include "su11/linalg.hpp"

namespace su11 {

// ((0, I), (-I, 0)) of size 2N.
RMatrix standard_j(std::size_t N);

struct SymplecticVerdict {
  bool symplectic = false;
  double residual = 0.0;  // max |S J S^T - J|
};

// Throws DomainError for non-square or odd-dimensional input.
SymplecticVerdict is_symplectic(const RMatrix& S, double tol = 1e-9);

// exp(J H) for a random symmetric H with entries of size `scale`.
RMatrix random_symplectic(std::size_t N, std::mt19937_64& rng, double scale = 0.5);

// [K1,K2] = -i K0, [K0,K1] = i K2, [K2,K0] = i K1 as f[a][b][c] with
// [K_a, K_b] = sum_c f[a][b][c] K_c and index order (K0, K1, K2).
using StructureConstants = std::array<std::array<std::array<std::complex<double>, 3>, 3>, 3>;
StructureConstants su11_structure_constants();

struct RealizationCheck {
  // Entries of [K1,K2] + i K0, [K0,K1] - i K2, [K2,K0] - i K1, computed in exact
  // Gaussian-rational arithmetic and converted at the end.
  double k1k2 = 0.0;
  double k0k1 = 0.0;
  double k2k0 = 0.0;
  bool exact_zero = false;
  StructureConstants structure{};  // extracted exactly with the trace form
  std::size_t dimension = 0;
};

// 2iK0 = -q d/dp + p d/dq, 2iK1 = -q d/dp - p d/dq, 2iK2 = -q d/dq + p d/dp on
// polynomials in (q, p) of degree <= max_degree (at most 8).
RealizationCheck vector_field_check(int max_degree = 8);

// Coefficients of K_j applied to the monomial q^a p^b, as (a', b', coefficient).
struct MonomialTerm {
  int a = 0;
  int b = 0;
  std::complex<double> coefficient;
};
std::array<MonomialTerm, 2> vector_field_action(int generator, int a, int b);

// K1 = (i/2) sigma_2, K2 = -(i/2) sigma_1, K0 = sigma_3 / 2.
struct PauliCheck {
  RealizationCheck algebra;
  bool k0_hermitian = false;
  bool k1_antihermitian = false;
  bool k2_antihermitian = false;
  std::array<double, 2> singular_values{};  // of exp(i t K1)
  double unitarity_defect = 0.0;            // max |U^H U - I|
};
PauliCheck pauli_realization_check(double t = 1.0);

}  // namespace su11
