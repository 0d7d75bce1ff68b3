#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "su11/linalg.hpp"

namespace su11 {

// Index semantics of a truncated operator's basis.
struct DiscreteSeriesBasis {
  double k;  // Bargmann index; basis |k,0>, ..., |k,M>
  bool operator==(const DiscreteSeriesBasis&) const = default;
};
struct FockOneModeBasis {
  bool operator==(const FockOneModeBasis&) const = default;
};
// Row-major product basis: index = n_a * N + n_b for two modes.
struct FockTwoModeBasis {
  int n_modes = 2;
  bool operator==(const FockTwoModeBasis&) const = default;
};

using BasisLabel = std::variant<DiscreteSeriesBasis, FockOneModeBasis, FockTwoModeBasis>;

std::string describe(const BasisLabel& label);

// Dense square complex matrix tagged with the basis it acts on.
class TruncatedOperator {
 public:
  TruncatedOperator(BasisLabel label, CMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& matrix() const { return entries_; }
  const BasisLabel& basis() const { return label_; }

 private:
  BasisLabel label_;
  CMatrix entries_;
};

// {"dim": n, "basis_label": {...}, "entries": [[re, im], ...]} with entries in
// row-major order. basis_label is {"kind": "discrete_series", "k": k},
// {"kind": "fock_one_mode"} or {"kind": "fock_two_mode", "n_modes": 2}.
nlohmann::json to_json(const TruncatedOperator& op);
TruncatedOperator operator_from_json(const nlohmann::json& j);

nlohmann::json basis_to_json(const BasisLabel& label);
BasisLabel basis_from_json(const nlohmann::json& j);

// [[re, im], ...] for a state vector.
nlohmann::json state_to_json(const CVector& v);

}  // namespace su11
