// Copyright 2026 The SWT Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "swt/effective_hamiltonian.hpp"
#include "swt/linalg.hpp"
#include "swt/qpe.hpp"
#include "swt/spin_models.hpp"
#include "swt/spsa.hpp"
#include "swt/state_vector.hpp"
#include "swt/vqa.hpp"

namespace swt {

/// Settings for one CLI command. Every field has a default.
struct RunConfig {
  ModelSpec model;
  AmplitudeBackend backend = AmplitudeBackend::kExactAmplitudes;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 20240501;
  double readout_flip = 0.0;
  double pauli_error = 0.0;
  std::optional<int> monte_carlo_pairs;
  /// "preset" (the fixed 4-spin ansatz) or "commutator".
  std::string ansatz = "preset";
  int max_iter = 300;
  int patience = 20;
  std::optional<double> spsa_a;
  double spsa_c = 0.1;
  std::vector<int> ancillas = {4, 6, 8};
  PhaseBranch branch = PhaseBranch::kPrincipal;
  /// Use phase-estimated reflections inside the square-root pipeline.
  bool nested = false;
  std::string out_dir = ".";

  ShotPlan shot_plan() const;
  CostConfig cost_config() const;
  SpsaOptions spsa_options() const;
  /// Throws kConfig / kModel for invalid values.
  void validate() const;
};

/// Sets one field from its text form; keys use '_' or '-' interchangeably.
/// Unknown keys and malformed values throw kConfig.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat "key = value" lines; '#' starts a comment.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);

/// Every field in text form, for provenance.
nlohmann::json config_echo(const RunConfig& config);

/// Writes report.json; returns its content.
nlohmann::json run_exact(const RunConfig& config);
/// Writes trace.csv and summary.json; returns the summary.
nlohmann::json run_vqa(const RunConfig& config);
/// Writes qpe_report.json; returns its content.
nlohmann::json run_qpe(const RunConfig& config);
/// Runs the invariant suite, writes check_report.json; the "passed" field
/// tells whether every check held.
nlohmann::json run_check(const RunConfig& config);

/// Complex matrix as row-major [[re, im], ...] rows.
nlohmann::json matrix_to_json(const DenseOperator& m);
nlohmann::json state_to_json(const StateVector& s);
nlohmann::json basis_to_json(const SubspaceBasis& basis);
nlohmann::json heff_to_json(const EffectiveHamiltonian& heff);

/// "%.17g".
std::string format_double17(double value);

}  // namespace swt
