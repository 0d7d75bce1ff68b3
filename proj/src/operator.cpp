#include "su11/operator.hpp"

#include <sstream>

namespace su11 {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string describe(const BasisLabel& label) {
  return std::visit(overloaded{[](const DiscreteSeriesBasis& b) {
                                 std::ostringstream os;
                                 os << "discrete_series(k=" << b.k << ")";
                                 return os.str();
                               },
                               [](const FockOneModeBasis&) { return std::string("fock_one_mode"); },
                               [](const FockTwoModeBasis& b) {
                                 return "fock_two_mode(" + std::to_string(b.n_modes) + ")";
                               }},
                    label);
}

TruncatedOperator::TruncatedOperator(BasisLabel label, CMatrix entries)
    : label_(std::move(label)), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("TruncatedOperator: matrix must be square");
  if (entries_.rows() < 1) throw DomainError("TruncatedOperator: dimension must be at least 1");
}

nlohmann::json basis_to_json(const BasisLabel& label) {
  return std::visit(
      overloaded{[](const DiscreteSeriesBasis& b) { return nlohmann::json{{"kind", "discrete_series"}, {"k", b.k}}; },
                 [](const FockOneModeBasis&) { return nlohmann::json{{"kind", "fock_one_mode"}}; },
                 [](const FockTwoModeBasis& b) {
                   return nlohmann::json{{"kind", "fock_two_mode"}, {"n_modes", b.n_modes}};
                 }},
      label);
}

BasisLabel basis_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "discrete_series") return DiscreteSeriesBasis{j.at("k").get<double>()};
  if (kind == "fock_one_mode") return FockOneModeBasis{};
  if (kind == "fock_two_mode") return FockTwoModeBasis{j.value("n_modes", 2)};
  throw DomainError("unknown basis_label kind: " + kind);
}

nlohmann::json to_json(const TruncatedOperator& op) {
  nlohmann::json entries = nlohmann::json::array();
  const CMatrix& m = op.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return {{"dim", op.dim()}, {"basis_label", basis_to_json(op.basis())}, {"entries", std::move(entries)}};
}

TruncatedOperator operator_from_json(const nlohmann::json& j) {
  const auto dim = j.at("dim").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (dim < 1 || entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw DomainError("operator JSON: entries must hold dim*dim [re, im] pairs");
  }
  CMatrix m(dim, dim);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c, ++idx) {
      const auto& e = entries[idx];
      m(r, c) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return TruncatedOperator(basis_from_json(j.at("basis_label")), std::move(m));
}

nlohmann::json state_to_json(const CVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

}  // namespace su11
