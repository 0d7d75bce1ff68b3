#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "su11/format.hpp"

namespace su11 {

// Every public operation; verify runs one hook per entry.
enum class Op : std::size_t {
  build_generators,
  commutator_residuals,
  ladder_interior_residuals,
  tilted_k0,
  ladder_reconstruction_check,
  coherent_state,
  displacement_to_disk,
  overlap,
  expectation_monomial,
  expectation_generators,
  resolution_of_unity,
  k0_diagonal_representation,
  one_mode_su11,
  parity_sector,
  squeeze_one_mode,
  displacement_and_coherent,
  two_mode_su11,
  squeeze_two_mode,
  polar_disk,
  embed_project,
  isometries,
  mobius,
  reflect,
  geodesic_distance,
  canonical_coordinates,
  classical_generators,
  poisson_bracket,
  canonical_bracket_check,
  energy_level,
  tilt_angle,
  differential_commutator_residual,
  radial_reduction_check,
  radial_fd_spectrum,
  is_symplectic,
  vector_field_check,
  pauli_realization_check,
  cli_run,
  count_
};

inline constexpr std::size_t op_count = static_cast<std::size_t>(Op::count_);

struct CheckRow {
  std::string module;
  std::string operation;
  std::string check;
  double value = 0.0;      // residual or deviation
  double tolerance = 0.0;  // pass when value <= tolerance
  bool passed = false;
};

struct OpInfo {
  Op op;
  std::string_view module;
  std::string_view name;
};

const std::array<OpInfo, op_count>& operation_registry();

// Runs every hook in registry order. Deterministic: fixed seeds, no timings.
std::vector<CheckRow> run_verification();

Table verification_table(const std::vector<CheckRow>& rows);
nlohmann::json verification_json(const std::vector<CheckRow>& rows);

}  // namespace su11
