#include "su11/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "su11/algebra.hpp"
#include "su11/coherent.hpp"
#include "su11/error.hpp"
#include "su11/format.hpp"
#include "su11/geometry.hpp"
#include "su11/hydrogen.hpp"
#include "su11/optics.hpp"
#include "su11/phase_space.hpp"
#include "su11/symplectic.hpp"
#include "su11/verify.hpp"

namespace su11 {

namespace {

using json = nlohmann::json;
using cd = std::complex<double>;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A command result: the JSON document and, when the generic flattening is a
// poor fit, an explicit CSV table.
struct Emit {
  json doc;
  std::optional<Table> table;
  bool failed = false;
};

double parse_double(std::string_view s, const std::string& flag) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw UsageError(flag + ": cannot read number '" + std::string(s) + "'");
  return v;
}

// "re" or "re,im".
cd parse_complex(const std::string& s, const std::string& flag) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_double(s, flag), 0.0};
  if (s.find(',', comma + 1) != std::string::npos) throw UsageError(flag + ": expected re or re,im");
  return {parse_double(std::string_view(s).substr(0, comma), flag),
          parse_double(std::string_view(s).substr(comma + 1), flag)};
}

json cjson(cd v) { return json::array({v.real(), v.imag()}); }

// Columns from the keys of the first record; nested scalar arrays become
// key_0, key_1, ...
void flatten_into(const json& j, const std::string& prefix, std::vector<std::string>& cols, std::vector<json>& vals) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_into(it.value(), prefix.empty() ? it.key() : prefix + "_" + it.key(), cols, vals);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], prefix + "_" + std::to_string(i), cols, vals);
  } else {
    cols.push_back(prefix.empty() ? "value" : prefix);
    vals.push_back(j);
  }
}

Table generic_table(const json& doc) {
  Table t;
  const json records = doc.is_array() ? doc : json::array({doc});
  for (const json& r : records) {
    std::vector<std::string> cols;
    std::vector<json> vals;
    flatten_into(r, "", cols, vals);
    if (t.columns.empty()) t.columns = cols;
    if (cols != t.columns) throw DomainError("records do not share columns; use --format json");
    t.rows.push_back(std::move(vals));
  }
  return t;
}

// Coefficients up to M + extra with the tail below 1e-17 for the oracles.
std::size_t oracle_cutoff(BargmannIndex k, DiskPoint z) {
  std::size_t M = 32;
  while (coherent_tail_bound(k, z.norm2(), FockCutoff{M}) > 1e-17 && M < 20000) M *= 2;
  return M;
}

// Applies K+ to v in place on a space of dimension v.size(); overflow drops.
void apply_kplus(double k, CVector& v) {
  for (Eigen::Index m = v.size() - 1; m > 0; --m) {
    const double mm = static_cast<double>(m - 1);
    v(m) = std::sqrt((mm + 1.0) * (2.0 * k + mm)) * v(m - 1);
  }
  v(0) = 0.0;
}

cd monomial_oracle(BargmannIndex k, DiskPoint z, unsigned p, unsigned q, unsigned r) {
  const std::size_t M = oracle_cutoff(k, z);
  const std::size_t extra = std::max(p, r) + 1;
  CVector c = CVector::Zero(static_cast<Eigen::Index>(M + 1 + extra));
  c.head(static_cast<Eigen::Index>(M + 1)) = coherent_state(k, z, FockCutoff{M}, 1.0).coeffs;
  CVector left = c, right = c;
  for (unsigned i = 0; i < p; ++i) apply_kplus(k.value(), left);
  for (unsigned i = 0; i < r; ++i) apply_kplus(k.value(), right);
  for (unsigned i = 0; i < q; ++i)
    for (Eigen::Index m = 0; m < right.size(); ++m) right(m) *= k.value() + static_cast<double>(m);
  return left.dot(right);
}

json record(BargmannIndex k, DiskPoint z, const std::string& quantity, const json& value, double tol,
            double oracle_residual) {
  return {{"k", k.value()},
          {"z", cjson(z.value())},
          {"quantity", quantity},
          {"value", value},
          {"tolerance", tol},
          {"oracle_residual", oracle_residual}};
}

Table state_table(const CVector& v, const std::string& index) {
  Table t{{index, "re", "im", "probability"}, {}};
  for (Eigen::Index i = 0; i < v.size(); ++i)
    t.rows.push_back({static_cast<std::int64_t>(i), v(i).real(), v(i).imag(), std::norm(v(i))});
  return t;
}

// ---- option bundles, filled by CLI11 and read in the handlers

struct Opts {
  // shared
  double k = 1.0;
  std::size_t M = 20;
  std::string z = "0";
  std::string z2 = "0";
  // rep
  std::string which = "K0";
  double theta = 0.5;
  std::size_t rows = 0;
  bool quad = false;
  // cs
  unsigned p = 0, q = 0, r = 0;
  std::size_t radial = 400, angular = 64;
  double epsilon = 1e-8;
  std::string quadrature_file;
  bool show_matrix = false;
  // optics
  std::size_t N = 40;
  bool two_mode = false;
  int n0 = 0;
  bool show_state = false;
  // geom
  std::string from = "0,0", to = "0.5,0";
  std::size_t samples = 33;
  double R = 1.0;
  std::optional<double> rotation;
  std::string boost;
  // phase
  std::string f = "K1", g = "K2";
  double h = 1e-4;
  bool richardson = false;
  std::optional<double> cq, cp;
  // hydrogen
  double Z = 1.0;
  int l = 0;
  std::size_t count = 3;
  bool fd_check = false;
  std::size_t points = 3000;
  std::optional<double> rmax;
  // symplectic
  std::string matrix_file;
  double tol = 1e-9;
};

DiskPoint disk_arg(const std::string& s, const std::string& flag) {
  const cd v = parse_complex(s, flag);
  if (!(std::norm(v) < 1.0)) throw DomainError(flag + ": point must lie in the open unit disk");
  return DiskPoint(v);
}

// ---- rep

Emit rep_residuals(const Opts& o) {
  const GeneratorSet g = build_generators(BargmannIndex(o.k), FockCutoff{o.M});
  const CommutatorResiduals c = commutator_residuals(g);
  const LadderResiduals q = ladder_interior_residuals(BargmannIndex(o.k), FockCutoff{o.M}, Precision::binary128);
  return {{{"k", o.k},
           {"M", o.M},
           {"interior_rows", g.interior_dim()},
           {"k1k2", c.k1k2},
           {"k0k1", c.k0k1},
           {"k2k0", c.k2k0},
           {"max", c.max()},
           {"casimir", BargmannIndex(o.k).casimir()},
           {"casimir_deviation", casimir_interior_deviation(g)},
           {"binary128_max", q.commutators.max()},
           {"binary128_casimir_deviation", q.casimir}},
          std::nullopt};
}

Emit rep_operator(const Opts& o) {
  const GeneratorSet g = build_generators(BargmannIndex(o.k), FockCutoff{o.M});
  const std::map<std::string, const TruncatedOperator*> ops{{"K0", &g.ops.K0}, {"K1", &g.ops.K1},
                                                            {"K2", &g.ops.K2}, {"Kplus", &g.ops.Kplus},
                                                            {"Kminus", &g.ops.Kminus}, {"C", &g.ops.C}};
  const auto it = ops.find(o.which);
  if (it == ops.end()) throw UsageError("--which: one of K0, K1, K2, Kplus, Kminus, C");
  const CMatrix& m = it->second->matrix();
  Table t{{"row", "col", "re", "im"}, {}};
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != cd(0.0)) t.rows.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                                m(i, j).real(), m(i, j).imag()});
  return {to_json(*it->second), t};
}

Emit rep_tilt(const Opts& o) {
  TiltOptions t;
  t.interior_rows = o.rows;
  t.precision = o.quad ? Precision::binary128 : Precision::binary64;
  const TiltResult r = tilted_k0(build_generators(BargmannIndex(o.k), FockCutoff{o.M}), o.theta, t);
  return {{{"k", o.k},
           {"M", o.M},
           {"theta", o.theta},
           {"precision", o.quad ? "binary128" : "binary64"},
           {"interior_rows", r.interior_rows},
           {"residual", r.residual},
           {"full_residual", r.full_residual}},
          std::nullopt};
}

Emit rep_ladder(const Opts& o) {
  return {{{"k", o.k}, {"M", o.M}, {"residual", ladder_reconstruction_check(BargmannIndex(o.k), FockCutoff{o.M})}},
          std::nullopt};
}

// ---- cs

DiskQuadrature quadrature_from(const Opts& o) {
  if (o.quadrature_file.empty()) return DiskQuadrature(o.radial, o.angular, o.epsilon);
  std::ifstream in(o.quadrature_file);
  if (!in) throw DomainError("cannot open quadrature file " + o.quadrature_file);
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw DomainError("quadrature file is not a JSON object");
  try {
    return DiskQuadrature(j.value("radial_nodes", o.radial), j.value("angular_nodes", o.angular),
                          j.value("epsilon", o.epsilon));
  } catch (const json::exception& e) {
    throw DomainError(std::string("quadrature file: ") + e.what());
  }
}

json quadrature_json(const DiskQuadrature& q) {
  return {{"radial_nodes", q.radial_nodes()}, {"angular_nodes", q.angular_nodes()}, {"epsilon", q.epsilon()}};
}

Emit cs_state(const Opts& o) {
  const BargmannIndex k(o.k);
  const DiskPoint z = disk_arg(o.z, "--z");
  const CoherentState c = coherent_state(k, z, FockCutoff{o.M});
  return {{{"k", o.k},
           {"z", cjson(z.value())},
           {"M", o.M},
           {"coefficients", state_to_json(c.coeffs)},
           {"tail_deficit", c.tail_deficit},
           {"tail_bound", c.tail_bound},
           {"tail_flagged", c.tail_flagged}},
          state_table(c.coeffs, "m")};
}

Emit cs_overlap(const Opts& o) {
  const BargmannIndex k(o.k);
  const DiskPoint a = disk_arg(o.z, "--z1"), b = disk_arg(o.z2, "--z2");
  const cd v = overlap(k, a, b);
  const std::size_t M = std::max(oracle_cutoff(k, a), oracle_cutoff(k, b));
  const cd sum = coherent_state(k, a, FockCutoff{M}, 1.0).coeffs.dot(coherent_state(k, b, FockCutoff{M}, 1.0).coeffs);
  json r = record(k, a, "overlap", cjson(v), 1e-12, std::abs(v - sum));
  r["z2"] = cjson(b.value());
  return {r, std::nullopt};
}

Emit cs_expect(const Opts& o) {
  const BargmannIndex k(o.k);
  const DiskPoint z = disk_arg(o.z, "--z");
  const cd v = expectation_monomial(k, z, o.p, o.q, o.r);
  const cd oracle = monomial_oracle(k, z, o.p, o.q, o.r);
  const double scale = std::max(1.0, std::abs(oracle));
  json r = record(k, z, "expectation_monomial", v.real(), 1e-9, std::abs(v - oracle) / scale);
  r["imag"] = v.imag();
  r["p"] = o.p;
  r["q"] = o.q;
  r["r"] = o.r;
  return {r, std::nullopt};
}

Emit cs_generators(const Opts& o) {
  const BargmannIndex k(o.k);
  const DiskPoint z = disk_arg(o.z, "--z");
  const GeneratorMeans g = expectation_generators(k, z);
  const cd km = expectation_monomial(k, z, 1, 0, 0);
  const cd k0 = expectation_monomial(k, z, 0, 1, 0);
  return {json::array({record(k, z, "K1", g.K1, 1e-12, std::abs(g.K1 - km.real())),
                       record(k, z, "K2", g.K2, 1e-12, std::abs(g.K2 - km.imag())),
                       record(k, z, "K0", g.K0, 1e-12, std::abs(g.K0 - k0.real()))}),
          std::nullopt};
}

Emit cs_unity(const Opts& o) {
  const DiskQuadrature q = quadrature_from(o);
  const UnityResult r = resolution_of_unity(BargmannIndex(o.k), q, FockCutoff{o.M}, o.rows);
  json j{{"k", o.k},
         {"M", o.M},
         {"quadrature", quadrature_json(q)},
         {"checked_rows", r.checked_rows},
         {"residual", r.residual},
         {"off_diagonal", r.off_diagonal},
         {"cutoff_bias", r.cutoff_bias}};
  json diag = json::array();
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) diag.push_back(r.matrix(i, i).real());
  j["diagonal"] = diag;
  if (o.show_matrix) j["matrix"] = to_json(TruncatedOperator(DiscreteSeriesBasis{o.k}, r.matrix));
  Table t{{"m", "diagonal"}, {}};
  for (std::size_t i = 0; i < diag.size(); ++i) t.rows.push_back({static_cast<std::int64_t>(i), diag[i]});
  return {j, t};
}

Emit cs_k0diag(const Opts& o) {
  const DiskQuadrature q = quadrature_from(o);
  const K0DiagonalResult r = k0_diagonal_representation(BargmannIndex(o.k), q, FockCutoff{o.M}, o.rows);
  json diag = json::array();
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) diag.push_back(r.matrix(i, i).real());
  Table t{{"m", "diagonal", "fitted", "k_plus_m"}, {}};
  for (std::size_t i = 0; i < diag.size(); ++i)
    t.rows.push_back({static_cast<std::int64_t>(i), diag[i], r.fitted_prefactor * diag[i].get<double>(),
                      o.k + static_cast<double>(i)});
  return {{{"k", o.k},
           {"M", o.M},
           {"quadrature", quadrature_json(q)},
           {"checked_rows", r.checked_rows},
           {"fitted_prefactor", r.fitted_prefactor},
           {"printed_prefactor", r.printed_prefactor},
           {"residual", r.residual},
           {"off_diagonal", r.off_diagonal},
           {"diagonal", diag}},
          t};
}

Emit cs_displace(const Opts& o) {
  const BargmannIndex k(o.k);
  const cd zeta = parse_complex(o.z, "--zeta");
  const TruncatedOperator d = su11_displacement(k, zeta, FockCutoff{o.M});
  const DiskPoint z = displacement_to_disk(zeta);
  const CVector col = d.matrix().col(0);
  const CVector c = coherent_state(k, z, FockCutoff{o.M}, 1.0).coeffs;
  return {{{"k", o.k},
           {"zeta", cjson(zeta)},
           {"z", cjson(z.value())},
           {"M", o.M},
           {"fidelity", std::norm(c.dot(col))},
           {"state", state_to_json(col)}},
          state_table(col, "m")};
}

// ---- optics

Emit optics_squeeze(const Opts& o) {
  const cd xi = parse_complex(o.z, "--xi");
  const BosonicTruncation n{o.N};
  const FockEvolution ev = o.two_mode ? squeeze_two_mode(xi, n, o.n0) : squeeze_one_mode(xi, n);
  const SectorDecomposition s =
      o.two_mode ? two_mode_sector(n, o.n0) : parity_sector(n, Parity::even).sector;
  const DiskPoint z(squeeze_to_disk(xi));
  const CVector c = coherent_state(s.k_equivalent, z, FockCutoff{s.embedded_basis.size() - 1}, 1.0).coeffs;
  const CVector restricted = ev.image(s.embedded_basis);
  json j{{"xi", cjson(xi)},
         {"N", o.N},
         {"mode", o.two_mode ? "two" : "one"},
         {"k_equivalent", s.k_equivalent.value()},
         {"z", cjson(z.value())},
         {"fidelity", std::norm(c.dot(restricted))},
         {"edge_weight", ev.edge_weight},
         {"tail_flagged", ev.tail_flagged}};
  if (o.two_mode) j["n0"] = o.n0;
  std::optional<Table> t;
  if (o.show_state) {
    j["state"] = state_to_json(ev.image);
    t = state_table(ev.image, "index");
  }
  return {j, t};
}

Emit optics_displace(const Opts& o) {
  const cd alpha = parse_complex(o.z, "--alpha");
  const BosonicTruncation n{o.N};
  const FockEvolution ev = displacement_and_coherent(alpha, n);
  const CVector g = glauber_state(alpha, n);
  json j{{"alpha", cjson(alpha)},
         {"N", o.N},
         {"vacuum_amplitude", cjson(ev.image(0))},
         {"glauber_residual", (ev.image - g).cwiseAbs().maxCoeff()},
         {"edge_weight", ev.edge_weight},
         {"tail_flagged", ev.tail_flagged}};
  std::optional<Table> t;
  if (o.show_state) {
    j["state"] = state_to_json(ev.image);
    t = state_table(ev.image, "n");
  }
  return {j, t};
}

Emit optics_sectors(const Opts& o) {
  const BosonicTruncation n{o.N};
  json rows = json::array();
  auto push = [&](const SectorRestriction& r, const json& label) {
    rows.push_back({{"sector", label},
                    {"size", r.sector.embedded_basis.size()},
                    {"k", r.sector.k_equivalent.value()},
                    {"interior_rows", r.interior_dim},
                    {"deviation", r.deviation}});
  };
  if (o.two_mode) {
    const TwoModeRealization tm = two_mode_su11(n);
    for (int n0 = -static_cast<int>(o.N) + 1; n0 < static_cast<int>(o.N); ++n0) push(restrict_two_mode(tm, n0), n0);
  } else {
    push(parity_sector(n, Parity::even), "even");
    push(parity_sector(n, Parity::odd), "odd");
  }
  return {rows, std::nullopt};
}

// ---- geom

Emit geom_geodesic(const Opts& o) {
  const DiskPoint a = disk_arg(o.from, "--from"), b = disk_arg(o.to, "--to");
  const double d = geodesic_distance(a, b);
  const auto arc = geodesic_arc(a, b, o.samples);
  json pts = json::array();
  Table t{{"s", "x", "y", "distance"}, {}};
  for (const ArcSample& s : arc) {
    pts.push_back({{"s", s.s}, {"x", s.z.value().real()}, {"y", s.z.value().imag()}});
    t.rows.push_back({s.s, s.z.value().real(), s.z.value().imag(), d});
  }
  return {{{"from", cjson(a.value())}, {"to", cjson(b.value())}, {"distance", d}, {"arc", pts}}, t};
}

Emit geom_point(const Opts& o) {
  const DiskPoint z = disk_arg(o.z, "--z");
  const PolarCoords p = disk_to_polar(z);
  const PseudospherePoint y = embed(p, o.R);
  return {{{"z", cjson(z.value())},
           {"tau", p.tau},
           {"phi", p.phi},
           {"R", o.R},
           {"pseudosphere", json::array({y.y1(), y.y2(), y.y0()})},
           {"area_weight", area_weight(z)},
           {"distance_from_origin", geodesic_distance(DiskPoint(), z)}},
          std::nullopt};
}

Emit geom_mobius(const Opts& o) {
  const DiskPoint z = disk_arg(o.z, "--z");
  MobiusTransform t = mobius_rotation(0.0);
  LorentzMatrix l = isometry_rotation(0.0);
  if (o.rotation) {
    t = mobius_rotation(*o.rotation) * t;
    l = isometry_rotation(*o.rotation) * l;
  }
  if (!o.boost.empty()) {
    const cd b = parse_complex(o.boost, "--boost");
    t = mobius_boost(b.real(), b.imag()) * t;
    l = isometry_boost(b.real(), b.imag()) * l;
  }
  const DiskPoint w = apply_mobius(t, z);
  const DiskPoint via3 = project(l.apply(embed(disk_to_polar(z))));
  return {{{"z", cjson(z.value())},
           {"alpha", cjson(t.alpha())},
           {"beta", cjson(t.beta())},
           {"image", cjson(w.value())},
           {"lorentz_residual", lorentz_residual(l.matrix())},
           {"consistency", std::abs(w.value() - via3.value())},
           {"distance_change", std::abs(geodesic_distance(DiskPoint(), z) - geodesic_distance(apply_mobius(t, DiskPoint()), w))}},
          std::nullopt};
}

// ---- phase

DiskPoint phase_point(const Opts& o, BargmannIndex k) {
  if (o.cq || o.cp) return disk_from_canonical({o.cq.value_or(0.0), o.cp.value_or(0.0)}, k);
  return disk_arg(o.z, "--z");
}

ScalarField named_field(const std::string& name, BargmannIndex k) {
  if (name == "K0") return generator_field(Generator::K0, k);
  if (name == "K1") return generator_field(Generator::K1, k);
  if (name == "K2") return generator_field(Generator::K2, k);
  if (name == "q") return canonical_q_field(k);
  if (name == "p") return canonical_p_field(k);
  throw UsageError("field must be one of K0, K1, K2, q, p");
}

Emit phase_point_cmd(const Opts& o) {
  const BargmannIndex k(o.k);
  const DiskPoint z = phase_point(o, k);
  const CanonicalPoint c = canonical_from_disk(z, k);
  const ClassicalGenerators g = classical_generators(c, k);
  const GeneratorMeans e = expectation_generators(k, z);
  return {{{"k", o.k},
           {"z", cjson(z.value())},
           {"q", c.q},
           {"p", c.p},
           {"K1", g.K1},
           {"K2", g.K2},
           {"K0", g.K0},
           {"casimir_deviation", std::abs(g.K0 * g.K0 - g.K1 * g.K1 - g.K2 * g.K2 - o.k * o.k)},
           {"expectation_residual",
            std::max({std::abs(g.K1 - e.K1), std::abs(g.K2 - e.K2), std::abs(g.K0 - e.K0)})}},
          std::nullopt};
}

Emit phase_bracket(const Opts& o) {
  const BargmannIndex k(o.k);
  const DiskPoint z = phase_point(o, k);
  const ScalarField f = named_field(o.f, k), g = named_field(o.g, k);
  const BracketOptions b{o.h, o.richardson};
  const cd v = poisson_bracket(f, g, z, k, b);
  const CanonicalBracket c = canonical_bracket_check(f, g, canonical_from_disk(z, k), k, b);
  json j{{"k", o.k},
         {"z", cjson(z.value())},
         {"f", o.f},
         {"g", o.g},
         {"h", o.h},
         {"richardson", o.richardson},
         {"bracket", cjson(v)},
         {"canonical", cjson(c.canonical)},
         {"canonical_difference", c.difference}};
  // Closed forms for the generator and (q,p) pairs.
  static const std::map<std::pair<std::string, std::string>, std::pair<std::string, double>> table{
      {{"K1", "K2"}, {"K0", 1.0}},  {{"K2", "K1"}, {"K0", -1.0}}, {{"K0", "K1"}, {"K2", -1.0}},
      {{"K1", "K0"}, {"K2", 1.0}},  {{"K2", "K0"}, {"K1", -1.0}}, {{"K0", "K2"}, {"K1", 1.0}}};
  std::optional<double> expected;
  if (const auto it = table.find({o.f, o.g}); it != table.end())
    expected = it->second.second * named_field(it->second.first, k)(z).real();
  else if (o.f == "q" && o.g == "p")
    expected = 1.0;
  else if (o.f == "p" && o.g == "q")
    expected = -1.0;
  else if (o.f == o.g)
    expected = 0.0;
  if (expected) {
    j["expected"] = *expected;
    j["residual"] = std::abs(v - *expected);
  }
  return {j, std::nullopt};
}

// ---- hydrogen

Emit hydrogen_cmd(const Opts& o) {
  if (o.count == 0) throw DomainError("--count must be positive");
  std::vector<QuantumNumbers> qn;
  for (std::size_t m = 0; m < o.count; ++m) qn.emplace_back(o.Z, o.l, static_cast<int>(m));
  std::optional<FdSpectrum> fd;
  if (o.fd_check) {
    const double n_max = qn.back().n();
    const double r_max = o.rmax.value_or(std::max(60.0, 6.0 * n_max * n_max) / o.Z);
    fd = radial_fd_spectrum(o.Z, o.l, RadialGrid(1e-5, r_max, o.points), o.count);
  }
  json rows = json::array();
  for (std::size_t i = 0; i < qn.size(); ++i) {
    json r{{"n", qn[i].n()},
           {"l", o.l},
           {"m", qn[i].m},
           {"Z", o.Z},
           {"E_algebraic", energy_level(qn[i])},
           {"E_printed", printed_energy_level(qn[i])},
           {"k0_eigenvalue", k0_eigenvalue(o.Z, energy_level(qn[i]))}};
    if (fd) {
      r["E_fd"] = fd->eigenvalues[i];
      r["E_fd_refined"] = fd->refined[i];
      r["diff"] = std::abs(fd->eigenvalues[i] - energy_level(qn[i]));
    }
    rows.push_back(r);
  }
  return {rows, std::nullopt};
}

// ---- symplectic

Emit symplectic_check(const Opts& o) {
  std::ifstream in(o.matrix_file);
  if (!in) throw DomainError("cannot open " + o.matrix_file);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw DomainError(o.matrix_file + " is not valid JSON");
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  if (!j.is_array() || j.empty()) throw DomainError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RMatrix S(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw DomainError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number()) throw DomainError("matrix entries must be numbers");
      S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = j[i][c].get<double>();
    }
  }
  const SymplecticVerdict v = is_symplectic(S, o.tol);
  return {{{"symplectic", v.symplectic}, {"residual", v.residual}, {"tolerance", o.tol}, {"dimension", rows}},
          std::nullopt};
}

json realization_json(const std::string& name, const RealizationCheck& r) {
  return {{"realization", name},
          {"dimension", r.dimension},
          {"k1k2", r.k1k2},
          {"k0k1", r.k0k1},
          {"k2k0", r.k2k0},
          {"exact_zero", r.exact_zero}};
}

Emit symplectic_realizations(const Opts&) {
  const PauliCheck p = pauli_realization_check(1.0);
  return {json::array({realization_json("vector_field", vector_field_check(8)), realization_json("pauli", p.algebra)}),
          std::nullopt};
}

// ---- verify

Emit verify_cmd(const Opts&) {
  const auto rows = run_verification();
  const json j = verification_json(rows);
  Emit e{j, verification_table(rows)};
  e.failed = j["failed"].get<std::size_t>() != 0;
  return e;
}

using Handler = Emit (*)(const Opts&);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"su(1,1) toolkit: representations, coherent states, optics, geometry, phase space, hydrogen"};
  app.name("su11");
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--output,-o", output, "Write to this file instead of standard output");

  Opts o;
  Handler handler = nullptr;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->fallthrough();
    c->callback([&handler, h] { handler = h; });
    return c;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->fallthrough();
    c->require_subcommand(1);
    return c;
  };
  auto k_opt = [&](CLI::App* c) { c->add_option("--k", o.k, "Bargmann index")->capture_default_str(); };

  CLI::App* rep = group("rep", "Truncated discrete-series representations");
  {
    auto* c = leaf(rep, "residuals", "Commutator and Casimir residuals", rep_residuals);
    k_opt(c);
    c->add_option("--M", o.M, "Fock cutoff")->capture_default_str();
    c = leaf(rep, "operator", "Matrix of one generator", rep_operator);
    k_opt(c);
    c->add_option("--M", o.M, "Fock cutoff")->capture_default_str();
    c->add_option("--which", o.which, "K0, K1, K2, Kplus, Kminus or C")->capture_default_str();
    c = leaf(rep, "tilt", "exp(-i theta K2) K0 exp(i theta K2) identity", rep_tilt);
    k_opt(c);
    c->add_option("--M", o.M, "Fock cutoff")->capture_default_str();
    c->add_option("--theta", o.theta)->capture_default_str();
    c->add_option("--rows", o.rows, "Checked leading rows (0 = automatic)")->capture_default_str();
    c->add_flag("--quad", o.quad, "Use binary128 arithmetic");
    c = leaf(rep, "ladder", "Ladder reconstruction from K1, K2", rep_ladder);
    k_opt(c);
    c->add_option("--M", o.M, "Fock cutoff")->capture_default_str();
  }

  CLI::App* cs = group("cs", "Coherent states on the disk");
  {
    auto* c = leaf(cs, "state", "Coefficients of |z,k>", cs_state);
    k_opt(c);
    c->add_option("--z", o.z, "Disk point re[,im]")->required();
    c->add_option("--M", o.M, "Fock cutoff")->capture_default_str();
    c = leaf(cs, "overlap", "<z1,k|z2,k>", cs_overlap);
    k_opt(c);
    c->add_option("--z1", o.z, "Disk point re[,im]")->required();
    c->add_option("--z2", o.z2, "Disk point re[,im]")->required();
    c = leaf(cs, "expect", "<z,k| K-^p K0^q K+^r |z,k>", cs_expect);
    k_opt(c);
    c->add_option("--z", o.z, "Disk point re[,im]")->required();
    c->add_option("--p", o.p)->capture_default_str();
    c->add_option("--q", o.q)->capture_default_str();
    c->add_option("--r", o.r)->capture_default_str();
    c = leaf(cs, "generators", "Means of K1, K2, K0", cs_generators);
    k_opt(c);
    c->add_option("--z", o.z, "Disk point re[,im]")->required();
    for (auto [name, h] : {std::pair{"unity", cs_unity}, std::pair{"k0diag", cs_k0diag}}) {
      c = leaf(cs, name, std::string(name) == "unity" ? "Resolution of unity by quadrature"
                                                      : "Diagonal K0 representation by quadrature",
               h);
      k_opt(c);
      c->add_option("--M", o.M, "Fock cutoff")->capture_default_str();
      c->add_option("--radial", o.radial, "Gauss-Legendre nodes in |z|^2")->capture_default_str();
      c->add_option("--angular", o.angular, "Trapezoid nodes in angle")->capture_default_str();
      c->add_option("--epsilon", o.epsilon, "Radial cutoff 1 - |z|^2")->capture_default_str();
      c->add_option("--rows", o.rows, "Checked leading rows (0 = automatic)")->capture_default_str();
      c->add_option("--quadrature", o.quadrature_file, "JSON file {radial_nodes, angular_nodes, epsilon}");
      if (std::string(name) == "unity") c->add_flag("--matrix", o.show_matrix, "Include the full matrix");
    }
    c = leaf(cs, "displace", "exp(zeta K+ - zeta* K-) on the lowest state", cs_displace);
    k_opt(c);
    c->add_option("--zeta", o.z, "re[,im]")->required();
    c->add_option("--M", o.M, "Fock cutoff")->capture_default_str();
  }

  CLI::App* optics = group("optics", "Bosonic realizations");
  {
    auto* c = leaf(optics, "squeeze", "Squeezed vacuum", optics_squeeze);
    c->add_option("--xi", o.z, "re[,im]")->required();
    c->add_option("--N", o.N, "Fock levels per mode")->capture_default_str();
    c->add_flag("--two-mode", o.two_mode);
    c->add_option("--n0", o.n0, "Two-mode sector n_a - n_b")->capture_default_str();
    c->add_flag("--state", o.show_state, "Include the state vector");
    c = leaf(optics, "displace", "Glauber displacement of the vacuum", optics_displace);
    c->add_option("--alpha", o.z, "re[,im]")->required();
    c->add_option("--N", o.N, "Fock levels")->capture_default_str();
    c->add_flag("--state", o.show_state, "Include the state vector");
    c = leaf(optics, "sectors", "Sector restrictions vs the discrete series", optics_sectors);
    c->add_option("--N", o.N, "Fock levels per mode")->capture_default_str();
    c->add_flag("--two-mode", o.two_mode);
  }

  CLI::App* geom = group("geom", "Disk and pseudosphere geometry");
  {
    auto* c = leaf(geom, "geodesic", "Distance and sampled arc", geom_geodesic);
    c->add_option("--from", o.from, "x,y")->capture_default_str();
    c->add_option("--to", o.to, "x,y")->capture_default_str();
    c->add_option("--samples", o.samples)->capture_default_str();
    c = leaf(geom, "point", "Polar and pseudosphere coordinates of a disk point", geom_point);
    c->add_option("--z", o.z, "x,y")->required();
    c->add_option("--R", o.R, "Pseudosphere radius")->capture_default_str();
    c = leaf(geom, "mobius", "Rotation then boost applied to a point", geom_mobius);
    c->add_option("--z", o.z, "x,y")->required();
    c->add_option("--rotation", o.rotation, "phi0");
    c->add_option("--boost", o.boost, "tau0,phi0");
  }

  CLI::App* phase = group("phase", "Classical phase space");
  {
    for (auto [name, h] : {std::pair{"point", phase_point_cmd}, std::pair{"bracket", phase_bracket}}) {
      auto* c = leaf(phase, name, std::string(name) == "point" ? "Canonical coordinates and generators"
                                                               : "Finite-difference Poisson bracket",
                     h);
      k_opt(c);
      c->add_option("--z", o.z, "Disk point x,y")->capture_default_str();
      c->add_option("--q", o.cq, "Canonical q (overrides --z)");
      c->add_option("--p", o.cp, "Canonical p (overrides --z)");
      if (std::string(name) == "bracket") {
        c->add_option("--f", o.f, "K0, K1, K2, q or p")->capture_default_str();
        c->add_option("--g", o.g, "K0, K1, K2, q or p")->capture_default_str();
        c->add_option("--step", o.h, "Difference step h")->capture_default_str();
        c->add_flag("--richardson", o.richardson);
      }
    }
  }

  {
    auto* c = leaf(&app, "hydrogen", "Hydrogen levels from the tilted K0 spectrum", hydrogen_cmd);
    c->add_option("--Z", o.Z, "Nuclear charge")->capture_default_str();
    c->add_option("--l", o.l, "Angular momentum")->capture_default_str();
    c->add_option("--count", o.count, "Number of levels")->capture_default_str();
    c->add_flag("--fd-check", o.fd_check, "Compare with a finite-difference radial solver");
    c->add_option("--points", o.points, "Radial grid points")->capture_default_str();
    c->add_option("--rmax", o.rmax, "Radial box size");
  }

  CLI::App* sym = group("symplectic", "Symplectic matrices and exact realizations");
  {
    auto* c = leaf(sym, "check", "Test S J S^T = J", symplectic_check);
    c->add_option("matrix", o.matrix_file, "JSON file: 2D array or {\"matrix\": ...}")->required();
    c->add_option("--tol", o.tol)->capture_default_str();
    leaf(sym, "realizations", "Exact commutators of the vector-field and 2x2 realizations", symplectic_realizations);
  }

  leaf(&app, "verify", "Run every verification hook", verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return exit_usage;
  }

  Emit result;
  try {
    result = handler(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }

  std::string text;
  try {
    text = format == "csv" ? dump_csv(result.table ? *result.table : generic_table(result.doc))
                           : dump_json(result.doc) + "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!(f << text)) {
      err << "error: cannot write " << output << '\n';
      return exit_domain;
    }
  }
  return result.failed ? exit_domain : exit_ok;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace su11
