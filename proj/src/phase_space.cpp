#include "su11/phase_space.hpp"

#include <cmath>

#include "su11/error.hpp"

namespace su11 {

CanonicalPoint canonical_from_disk(DiskPoint z, BargmannIndex k) {
  const std::complex<double> w = std::sqrt(4.0 * k.value()) * z.value() / std::sqrt(1.0 - z.norm2());
  return {w.real(), w.imag()};
}

DiskPoint disk_from_canonical(CanonicalPoint c, BargmannIndex k) {
  const double s = std::sqrt(4.0 * k.value() + c.q * c.q + c.p * c.p);
  return DiskPoint(c.q / s, c.p / s);
}

ClassicalGenerators classical_generators(CanonicalPoint c, BargmannIndex k) {
  const double s = std::sqrt(4.0 * k.value() + c.q * c.q + c.p * c.p);
  return {0.5 * c.q * s, 0.5 * c.p * s, k.value() + 0.5 * (c.q * c.q + c.p * c.p)};
}

ScalarField::ScalarField(Function f, std::size_t budget)
    : f_(std::move(f)), budget_(budget), count_(std::make_shared<std::atomic<std::size_t>>(0)) {}

std::complex<double> ScalarField::operator()(DiskPoint z) const {
  if (count_->fetch_add(1) >= budget_) throw BudgetError("scalar field evaluation budget exhausted");
  return f_(z);
}

ScalarField generator_field(Generator which, BargmannIndex k, std::size_t budget) {
  const double kv = k.value();
  return ScalarField(
      [which, kv](DiskPoint z) -> std::complex<double> {
        const double d = 1.0 - z.norm2();
        switch (which) {
          case Generator::K1: return 2.0 * kv * z.value().real() / d;
          case Generator::K2: return 2.0 * kv * z.value().imag() / d;
          case Generator::K0: return kv * (2.0 - d) / d;
        }
        return 0.0;
      },
      budget);
}

ScalarField canonical_q_field(BargmannIndex k, std::size_t budget) {
  return ScalarField([k](DiskPoint z) -> std::complex<double> { return canonical_from_disk(z, k).q; }, budget);
}

ScalarField canonical_p_field(BargmannIndex k, std::size_t budget) {
  return ScalarField([k](DiskPoint z) -> std::complex<double> { return canonical_from_disk(z, k).p; }, budget);
}

namespace {

struct Gradient {
  std::complex<double> dx, dy;
};

Gradient central_gradient(const ScalarField& f, std::complex<double> z, double h) {
  const std::complex<double> ex(h, 0.0), ey(0.0, h);
  return {(f(DiskPoint(z + ex)) - f(DiskPoint(z - ex))) / (2.0 * h),
          (f(DiskPoint(z + ey)) - f(DiskPoint(z - ey))) / (2.0 * h)};
}

Gradient gradient(const ScalarField& f, DiskPoint z, BracketOptions opts) {
  if (!(opts.h > 0.0)) throw DomainError("finite-difference step must be positive");
  if (!(z.abs() + opts.h < 1.0)) throw DomainError("finite-difference stencil leaves the disk");
  const Gradient coarse = central_gradient(f, z.value(), opts.h);
  if (!opts.richardson) return coarse;
  const Gradient fine = central_gradient(f, z.value(), 0.5 * opts.h);
  return {(4.0 * fine.dx - coarse.dx) / 3.0, (4.0 * fine.dy - coarse.dy) / 3.0};
}

}  // namespace

std::complex<double> poisson_bracket(const ScalarField& f, const ScalarField& g, DiskPoint z, BargmannIndex k,
                                     BracketOptions opts) {
  const Gradient a = gradient(f, z, opts);
  const Gradient b = gradient(g, z, opts);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> fz = 0.5 * (a.dx - i * a.dy), fzb = 0.5 * (a.dx + i * a.dy);
  const std::complex<double> gz = 0.5 * (b.dx - i * b.dy), gzb = 0.5 * (b.dx + i * b.dy);
  const double d = 1.0 - z.norm2();
  return d * d / (2.0 * i * k.value()) * (fz * gzb - fzb * gz);
}

ScalarField bracket_field(const ScalarField& f, const ScalarField& g, BargmannIndex k, BracketOptions opts,
                          std::size_t budget) {
  return ScalarField([f, g, k, opts](DiskPoint z) { return poisson_bracket(f, g, z, k, opts); }, budget);
}

CanonicalBracket canonical_bracket_check(const ScalarField& f, const ScalarField& g, CanonicalPoint c,
                                         BargmannIndex k, BracketOptions opts) {
  if (!(opts.h > 0.0)) throw DomainError("finite-difference step must be positive");
  auto partials = [&](const ScalarField& field, double h) {
    auto at = [&](double q, double p) { return field(disk_from_canonical({q, p}, k)); };
    return Gradient{(at(c.q + h, c.p) - at(c.q - h, c.p)) / (2.0 * h),
                    (at(c.q, c.p + h) - at(c.q, c.p - h)) / (2.0 * h)};
  };
  auto combined = [&](const ScalarField& field) {
    const Gradient coarse = partials(field, opts.h);
    if (!opts.richardson) return coarse;
    const Gradient fine = partials(field, 0.5 * opts.h);
    return Gradient{(4.0 * fine.dx - coarse.dx) / 3.0, (4.0 * fine.dy - coarse.dy) / 3.0};
  };
  const Gradient a = combined(f), b = combined(g);
  CanonicalBracket out;
  out.canonical = a.dx * b.dy - a.dy * b.dx;
  out.disk = poisson_bracket(f, g, disk_from_canonical(c, k), k, opts);
  out.difference = std::abs(out.canonical - out.disk);
  return out;
}

}  // namespace su11
