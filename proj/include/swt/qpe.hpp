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

#include <string>
#include <vector>

#include "swt/linalg.hpp"
#include "swt/numeric_policy.hpp"
#include "swt/pauli.hpp"
#include "swt/spin_models.hpp"
#include "swt/state_vector.hpp"

namespace swt {

/// Phase-estimation schedule for exp(-i (H - shift) t) on l ancillas.
struct QpeConfig {
  int l = 1;
  double time_scale = 0.0;
  double energy_shift = 0.0;
  /// Register values k >= k_threshold are flipped.
  int k_threshold = 0;

  /// Checks that (H - shift) t has its spectrum in [0, 2 pi) (kContract).
  void validate(const DenseOperator& h, const NumericPolicy& policy = default_policy()) const;
  /// Continuous register position 2^l (E - shift) t / 2 pi of an energy.
  double register_position(double energy) const;
};

/// shift = E_min, t = 2 pi (1 - 2^-l) / (E_max - E_min),
/// k_threshold = ceil(2^l (threshold - shift) t / 2 pi) clamped to [0, 2^l).
QpeConfig schedule_time(const DenseOperator& h, int l, double threshold_energy,
                        const NumericPolicy& policy = default_policy());

/// diag(+1 for k < k_threshold, -1 otherwise) on 2^l register values.
DenseOperator phase_flip_gate(int l, int k_threshold);

/// Data register after a phase-estimation pipeline, projected onto the
/// ancilla start state |+>^l. The projection is unnormalized; its missing
/// weight is the ancilla leakage.
struct QpeOutput {
  StateVector data;
  double ancilla_leakage = 0.0;
  std::vector<std::string> warnings;
};

/// Estimate, flip k >= k_threshold, un-estimate: approximates R_P|state>
/// where P projects onto eigenvalues below the threshold.
QpeOutput reflection_via_qpe(const StateVector& state, const DenseOperator& h, const QpeConfig& config,
                             const NumericPolicy& policy = default_policy());

/// Half-phase gate convention of swt_via_qpe. Register value k encodes the
/// eigenphase theta = -2 pi k / 2^l.
enum class PhaseBranch {
  /// theta wrapped to (-pi, pi] before halving: the principal square root.
  kPrincipal,
  /// exp(-i pi k / 2^l) as printed, i.e. theta taken in (-2 pi, 0].
  kLiteral,
};

/// Approximates sqrt(W)|state> for W = R_P0 R_P by phase estimation on W.
QpeOutput swt_via_qpe(const StateVector& state, const DenseOperator& reflection_product, int l,
                      PhaseBranch branch = PhaseBranch::kPrincipal,
                      const NumericPolicy& policy = default_policy());

/// The linear map realized by reflection_via_qpe, column by column.
DenseOperator qpe_reflection_operator(const DenseOperator& h, const QpeConfig& config,
                                      const NumericPolicy& policy = default_policy());

/// g_tau = sum_i h_i [Tr(tau P0 U rho_i U^dagger P0) - 2^-n Tr(tau P0)],
/// rho_i = (sigma_i + I) / 2^n, by dense traces. One value per tau.
std::vector<double> heff_pauli_reconstruction(const PauliSum& h, const DenseOperator& u, const SubspaceBasis& basis,
                                              const std::vector<PauliString>& ansatz_set,
                                              const NumericPolicy& policy = default_policy());

/// `seed` followed by every other n-qubit Pauli string in canonical order.
std::vector<PauliString> pauli_basis_completion(const std::vector<PauliString>& seed, int n_qubits);

/// <phi_i| sum_tau g_tau tau |phi_j>.
DenseOperator restrict_to_basis(const std::vector<PauliString>& strings, const std::vector<double>& coefficients,
                                const SubspaceBasis& basis);

}  // namespace swt
