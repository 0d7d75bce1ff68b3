#pragma once

#include <complex>

#include "su11/error.hpp"

namespace su11 {

// A point of the open unit disk, the coherent-state parameter space.
class DiskPoint {
 public:
  DiskPoint() = default;
  explicit DiskPoint(std::complex<double> z) : z_(z) {
    if (!(std::norm(z) < 1.0)) throw DomainError("disk point must satisfy |z| < 1");
  }
  DiskPoint(double x, double y) : DiskPoint(std::complex<double>(x, y)) {}

  std::complex<double> value() const { return z_; }
  double norm2() const { return std::norm(z_); }
  double abs() const { return std::abs(z_); }

 private:
  std::complex<double> z_{0.0, 0.0};
};

}  // namespace su11
