#include "su11/symplectic.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "su11/error.hpp"

namespace su11 {

RMatrix standard_j(std::size_t N) {
  const auto n = static_cast<Eigen::Index>(N);
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = RMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = -RMatrix::Identity(n, n);
  return j;
}

SymplecticVerdict is_symplectic(const RMatrix& S, double tol) {
  if (S.rows() != S.cols()) throw DomainError("symplectic candidate must be square");
  if (S.rows() == 0 || S.rows() % 2 != 0) throw DomainError("symplectic candidate must have even dimension");
  const RMatrix J = standard_j(static_cast<std::size_t>(S.rows() / 2));
  SymplecticVerdict v;
  v.residual = (S * J * S.transpose() - J).cwiseAbs().maxCoeff();
  v.symplectic = v.residual <= tol;
  return v;
}

RMatrix random_symplectic(std::size_t N, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  const auto n = static_cast<Eigen::Index>(2 * N);
  RMatrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) h(i, j) = h(j, i) = g(rng);
  return expm(RMatrix(standard_j(N) * h)).value;
}

StructureConstants su11_structure_constants() {
  StructureConstants f{};
  const std::complex<double> i(0.0, 1.0);
  f[1][2][0] = -i;
  f[2][1][0] = i;
  f[0][1][2] = i;
  f[1][0][2] = -i;
  f[2][0][1] = i;
  f[0][2][1] = -i;
  return f;
}

namespace {

// Exact rational with overflow detection.
class Q {
 public:
  Q(std::int64_t n = 0, std::int64_t d = 1) : n_(n), d_(d) {
    if (d_ == 0) throw DomainError("rational with zero denominator");
    normalize();
  }
  friend Q operator+(Q a, Q b) { return Q(add(mul(a.n_, b.d_), mul(b.n_, a.d_)), mul(a.d_, b.d_)); }
  friend Q operator-(Q a, Q b) { return a + Q(-b.n_, b.d_); }
  friend Q operator*(Q a, Q b) { return Q(mul(a.n_, b.n_), mul(a.d_, b.d_)); }
  friend Q operator/(Q a, Q b) { return Q(mul(a.n_, b.d_), mul(a.d_, b.n_)); }
  Q operator-() const { return Q(-n_, d_); }
  bool is_zero() const { return n_ == 0; }
  double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

 private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("rational overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("rational overflow");
    return r;
  }
  void normalize() {
    if (d_ < 0) {
      n_ = -n_;
      d_ = -d_;
    }
    const std::int64_t g = std::gcd(n_, d_);
    if (g > 1) {
      n_ /= g;
      d_ /= g;
    }
  }
  std::int64_t n_, d_;
};

struct G {
  Q re{0}, im{0};
  G() = default;
  G(Q r, Q i = Q(0)) : re(r), im(i) {}
  friend G operator+(G a, G b) { return {a.re + b.re, a.im + b.im}; }
  friend G operator-(G a, G b) { return {a.re - b.re, a.im - b.im}; }
  friend G operator*(G a, G b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend G operator/(G a, G b) {
    const Q d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  bool zero() const { return re.is_zero() && im.is_zero(); }
  G conj() const { return {re, -im}; }
  std::complex<double> value() const { return {re.to_double(), im.to_double()}; }
};

const G I_unit{Q(0), Q(1)};

using GMat = std::vector<std::vector<G>>;

GMat zeros(std::size_t n) { return GMat(n, std::vector<G>(n)); }

GMat mul(const GMat& a, const GMat& b) {
  const std::size_t n = a.size();
  GMat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].zero()) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

GMat axpy(const GMat& a, G s, const GMat& b) {  // a + s b
  GMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = a[i][j] + s * b[i][j];
  return c;
}

GMat commutator(const GMat& a, const GMat& b) { return axpy(mul(a, b), G(Q(-1)), mul(b, a)); }

G trace_product(const GMat& a, const GMat& b) {
  G t;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) t = t + a[i][k] * b[k][i];
  return t;
}

double max_entry(const GMat& a, bool& all_zero) {
  double m = 0.0;
  for (const auto& row : a)
    for (const G& g : row) {
      if (!g.zero()) all_zero = false;
      m = std::max(m, std::abs(g.value()));
    }
  return m;
}

G det3(const std::array<std::array<G, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Exact expansion of [K_a, K_b] in the K basis via the trace form and Cramer's rule.
RealizationCheck analyse(const std::array<GMat, 3>& K) {
  RealizationCheck out;
  out.dimension = K[0].size();
  bool all_zero = true;
  out.k1k2 = max_entry(axpy(commutator(K[1], K[2]), I_unit, K[0]), all_zero);
  out.k0k1 = max_entry(axpy(commutator(K[0], K[1]), G(Q(0), Q(-1)), K[2]), all_zero);
  out.k2k0 = max_entry(axpy(commutator(K[2], K[0]), G(Q(0), Q(-1)), K[1]), all_zero);
  out.exact_zero = all_zero;

  std::array<std::array<G, 3>, 3> gram;
  for (int c = 0; c < 3; ++c)
    for (int d = 0; d < 3; ++d) gram[c][d] = trace_product(K[c], K[d]);
  const G det = det3(gram);
  if (det.zero()) throw DomainError("degenerate trace form; structure constants undetermined");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const GMat X = commutator(K[a], K[b]);
      std::array<G, 3> rhs;
      for (int c = 0; c < 3; ++c) rhs[c] = trace_product(K[c], X);
      for (int c = 0; c < 3; ++c) {
        auto m = gram;
        for (int r = 0; r < 3; ++r) m[r][c] = rhs[r];
        out.structure[a][b][c] = (det3(m) / det).value();
      }
    }
  return out;
}

// 2i K_j applied to q^a p^b as two monomial terms with integer coefficients.
std::array<std::pair<std::pair<int, int>, std::int64_t>, 2> field_terms(int j, int a, int b) {
  // -q d/dp q^a p^b = -b q^(a+1) p^(b-1);  p d/dq q^a p^b = a q^(a-1) p^(b+1)
  // -q d/dq = -a q^a p^b;                  p d/dp = b q^a p^b
  switch (j) {
    case 0: return {{{{a + 1, b - 1}, -b}, {{a - 1, b + 1}, a}}};
    case 1: return {{{{a + 1, b - 1}, -b}, {{a - 1, b + 1}, -a}}};
    default: return {{{{a, b}, -a}, {{a, b}, b}}};
  }
}

}  // namespace

std::array<MonomialTerm, 2> vector_field_action(int generator, int a, int b) {
  if (generator < 0 || generator > 2 || a < 0 || b < 0) throw DomainError("invalid generator or monomial");
  const auto t = field_terms(generator, a, b);
  // K = (2iK) / (2i) = -(i/2) (2iK).
  const std::complex<double> scale(0.0, -0.5);
  return {MonomialTerm{t[0].first.first, t[0].first.second, scale * static_cast<double>(t[0].second)},
          MonomialTerm{t[1].first.first, t[1].first.second, scale * static_cast<double>(t[1].second)}};
}

RealizationCheck vector_field_check(int max_degree) {
  if (max_degree < 1 || max_degree > 8) throw DomainError("vector-field check supports degrees 1..8");
  std::map<std::pair<int, int>, std::size_t> index;
  for (int d = 0; d <= max_degree; ++d)
    for (int a = d; a >= 0; --a) index.emplace(std::pair{a, d - a}, index.size());
  const std::size_t n = index.size();
  const G minus_half_i(Q(0), Q(-1, 2));
  std::array<GMat, 3> K{zeros(n), zeros(n), zeros(n)};
  for (int j = 0; j < 3; ++j)
    for (const auto& [mono, col] : index)
      for (const auto& [target, coeff] : field_terms(j, mono.first, mono.second)) {
        if (coeff == 0) continue;
        const std::size_t row = index.at(target);
        K[j][row][col] = K[j][row][col] + minus_half_i * G(Q(coeff));
      }
  return analyse(K);
}

PauliCheck pauli_realization_check(double t) {
  const G half(Q(1, 2));
  const G ihalf(Q(0), Q(1, 2));
  // sigma_1 = ((0,1),(1,0)), sigma_2 = ((0,-i),(i,0)), sigma_3 = diag(1,-1).
  GMat k0 = zeros(2), k1 = zeros(2), k2 = zeros(2);
  k0[0][0] = half;
  k0[1][1] = G(Q(-1, 2));
  k1[0][1] = ihalf * G(Q(0), Q(-1));
  k1[1][0] = ihalf * I_unit;
  k2[0][1] = G(Q(0), Q(-1, 2));
  k2[1][0] = G(Q(0), Q(-1, 2));

  PauliCheck out;
  out.algebra = analyse({k0, k1, k2});
  auto is = [](const GMat& m, int sign) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const G h = m[j][i].conj();
        const G target = sign > 0 ? h : G() - h;
        if (!(m[i][j] - target).zero()) return false;
      }
    return true;
  };
  out.k0_hermitian = is(k0, 1);
  out.k1_antihermitian = is(k1, -1);
  out.k2_antihermitian = is(k2, -1);

  Eigen::Matrix2cd K1;
  K1 << k1[0][0].value(), k1[0][1].value(), k1[1][0].value(), k1[1][1].value();
  const Eigen::Matrix2cd U = expm(Eigen::Matrix2cd(std::complex<double>(0.0, t) * K1)).value;
  const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(U);
  out.singular_values = {svd.singularValues()(0), svd.singularValues()(1)};
  out.unitarity_defect = (U.adjoint() * U - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace su11
