#include "su11/linalg.hpp"

namespace su11 {

namespace {

// Number of eigenvalues strictly below x.
std::size_t sturm_count(std::span<const double> d, std::span<const double> e, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : e[i - 1] * e[i - 1];
    q = d[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::fabs(d[i]) + std::fabs(x) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diag,
                                                   std::span<const double> offdiag, std::size_t count,
                                                   double abs_tol) {
  const std::size_t n = diag.size();
  if (n == 0 || offdiag.size() + 1 != n) throw DomainError("tridiagonal: inconsistent sizes");
  if (count > n) throw DomainError("tridiagonal: more eigenvalues requested than the dimension");

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::fabs(offdiag[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(offdiag[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }

  std::vector<double> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    double a = lo;
    double b = hi;
    while (b - a > abs_tol * std::max(1.0, std::fabs(a) + std::fabs(b)) / 2.0) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (sturm_count(diag, offdiag, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(0.5 * (a + b));
    lo = out.back() - abs_tol;
  }
  return out;
}

}  // namespace su11
