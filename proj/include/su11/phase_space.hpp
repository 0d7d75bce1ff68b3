#pragma once

#include <atomic>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>

#include "su11/algebra.hpp"
#include "su11/disk.hpp"

namespace su11 {

struct CanonicalPoint {
  double q = 0.0;
  double p = 0.0;
};

// (q + ip) / sqrt(4k) = z / sqrt(1 - |z|^2).
CanonicalPoint canonical_from_disk(DiskPoint z, BargmannIndex k);
// z = (q + ip) / sqrt(4k + q^2 + p^2).
DiskPoint disk_from_canonical(CanonicalPoint c, BargmannIndex k);

struct ClassicalGenerators {
  double K1 = 0.0;
  double K2 = 0.0;
  double K0 = 0.0;
};

// K1 = (q/2) s, K2 = (p/2) s, K0 = k + (q^2 + p^2)/2 with s = sqrt(4k + q^2 + p^2).
ClassicalGenerators classical_generators(CanonicalPoint c, BargmannIndex k);

// A function on the open disk with a cap on the number of evaluations.
// Copies share the counter. The callback must be re-entrant.
class ScalarField {
 public:
  using Function = std::function<std::complex<double>(DiskPoint)>;
  static constexpr std::size_t default_budget = 1000000;

  explicit ScalarField(Function f, std::size_t budget = default_budget);

  // Throws BudgetError once the budget is spent.
  std::complex<double> operator()(DiskPoint z) const;
  std::size_t evaluations() const { return count_->load(); }
  std::size_t budget() const { return budget_; }

 private:
  Function f_;
  std::size_t budget_;
  std::shared_ptr<std::atomic<std::size_t>> count_;
};

enum class Generator { K1, K2, K0 };

// Classical generator k (y1, y2, y0) as a function of z.
ScalarField generator_field(Generator which, BargmannIndex k, std::size_t budget = ScalarField::default_budget);
ScalarField canonical_q_field(BargmannIndex k, std::size_t budget = ScalarField::default_budget);
ScalarField canonical_p_field(BargmannIndex k, std::size_t budget = ScalarField::default_budget);

struct BracketOptions {
  double h = 1e-4;
  bool richardson = false;  // combine steps h and h/2
};

// {f,g} = (1-|z|^2)^2 / (2ik) (f_z g_zbar - f_zbar g_z), with the Wirtinger
// derivatives from central differences along x and y.
std::complex<double> poisson_bracket(const ScalarField& f, const ScalarField& g, DiskPoint z, BargmannIndex k,
                                     BracketOptions opts = {});

// Bracket {f,g} as a field, for nesting.
ScalarField bracket_field(const ScalarField& f, const ScalarField& g, BargmannIndex k, BracketOptions opts = {},
                          std::size_t budget = ScalarField::default_budget);

struct CanonicalBracket {
  std::complex<double> canonical;  // f_q g_p - f_p g_q
  std::complex<double> disk;       // poisson_bracket at the image point
  double difference = 0.0;
};

// Evaluates {f,g} both in (q,p) and on the disk at the matching point.
CanonicalBracket canonical_bracket_check(const ScalarField& f, const ScalarField& g, CanonicalPoint c,
                                         BargmannIndex k, BracketOptions opts = {});

}  // namespace su11
