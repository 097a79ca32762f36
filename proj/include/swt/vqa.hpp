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
#include <span>
#include <string_view>
#include <vector>

#include "swt/ansatz.hpp"
#include "swt/effective_hamiltonian.hpp"
#include "swt/linalg.hpp"
#include "swt/pauli.hpp"
#include "swt/spin_models.hpp"
#include "swt/state_vector.hpp"

namespace swt {

enum class AmplitudeBackend {
  /// Inner products of simulated states.
  kExactAmplitudes,
  /// Expectations on U^dagger (I +- G)|phi>/sqrt2, optionally shot-sampled.
  kGDecompositionShots,
};

std::string_view to_string(AmplitudeBackend backend);
/// Accepts "exact_amplitudes" / "exact" and "g_decomposition_shots" / "shots".
AmplitudeBackend parse_backend(std::string_view text);

struct CostConfig {
  AmplitudeBackend backend = AmplitudeBackend::kExactAmplitudes;
  /// Ignored by the exact backend.
  ShotPlan shot_plan;
  /// When set, the off-diagonal sum of the cost is estimated from this many
  /// (i, j) pairs drawn uniformly with replacement.
  std::optional<int> monte_carlo_pairs;

  void validate(int m_size) const;
};

/// The transformation U under test: a parameterized circuit at fixed theta,
/// or an injected dense unitary.
class SwtTransform {
 public:
  SwtTransform(ParameterizedCircuit circuit, std::vector<double> theta);
  explicit SwtTransform(DenseOperator u);

  int n_qubits() const;
  bool is_circuit() const { return !dense_.has_value(); }

  /// U^dagger |phi>.
  StateVector apply_adjoint(const StateVector& phi) const;
  /// Estimate of <sigma> on U^dagger |phi>, circuit noise included.
  double adjoint_expectation(const StateVector& phi, const PauliString& sigma, const ShotPlan& plan,
                             RngStream& rng) const;
  DenseOperator dense(const NumericPolicy& policy = default_policy()) const;

 private:
  ParameterizedCircuit circuit_;
  std::vector<double> theta_;
  std::optional<DenseOperator> dense_;
};

/// <phi_i| U sigma U^dagger |phi_j>. The g-decomposition backend returns the
/// real part only and needs a G relation for i != j (kBackendUnsupported
/// otherwise). `evaluation` selects fresh random streams.
Complex transition_amplitude(const SubspaceBasis& basis, int i, int j, const PauliString& observable,
                             const SwtTransform& transform, const CostConfig& config,
                             std::uint64_t evaluation = 0);

/// Matrix <phi_i|U H U^dagger|phi_j> with the per-entry standard error of
/// the sampled estimate (zero for exact evaluation). In shot mode the matrix
/// is measured for all ordered pairs and not yet Hermitized.
struct AmplitudeMatrix {
  DenseOperator values;
  Eigen::MatrixXd standard_errors;
};

/// Evaluates C and the H_eff amplitudes with H^2 expanded once.
class CostEvaluator {
 public:
  CostEvaluator(const SubspaceBasis& basis, PauliSum h, CostConfig config,
                const NumericPolicy& policy = default_policy());

  const CostConfig& config() const { return config_; }
  const PauliSum& hamiltonian() const { return h_; }
  const PauliSum& hamiltonian_squared() const { return h2_; }

  /// C = (1/M)[sum_i <H^2>_i - sum_{i,j} |<i|U H U^dagger|j>|^2].
  double signed_cost(const SwtTransform& transform, std::uint64_t evaluation = 0) const;
  double cost(const SwtTransform& transform, std::uint64_t evaluation = 0) const;
  AmplitudeMatrix amplitude_matrix(const SwtTransform& transform, std::uint64_t evaluation = 0) const;

 private:
  double diagonal_h2(const std::vector<StateVector>& psi, const SwtTransform& transform,
                     std::uint64_t evaluation) const;
  /// Entry (i, j) of U H U^dagger with its variance.
  std::pair<Complex, double> entry(int i, int j, const std::vector<StateVector>& psi,
                                   const SwtTransform& transform, std::uint64_t evaluation) const;

  const SubspaceBasis& basis_;
  PauliSum h_;
  PauliSum h2_;
  CostConfig config_;
  NumericPolicy policy_;
};

/// |C| for a circuit at theta.
double cost_c(const SubspaceBasis& basis, const PauliSum& h, const ParameterizedCircuit& circuit,
              std::span<const double> theta, const CostConfig& config);

/// L_t = -(1/M) sum_{i,j} |<phi_i|U exp(-iHt) U^dagger|phi_j>|^2, dense.
double cost_evolution(const SubspaceBasis& basis, const PauliSum& h, const SwtTransform& transform, double t,
                      const NumericPolicy& policy = default_policy());
double cost_evolution(const SubspaceBasis& basis, const PauliSum& h, const ParameterizedCircuit& circuit,
                      std::span<const double> theta, double t);

struct HeffEstimate {
  EffectiveHamiltonian heff;
  /// Standard error of each entry of the (Hermitized) matrix.
  Eigen::MatrixXd standard_errors;
};

/// Builds H_eff from the amplitudes. Shot-mode matrices are Hermitized; with
/// a reference, per-eigenstate fidelities are attached.
HeffEstimate reconstruct_heff(const SubspaceBasis& basis, const PauliSum& h, const SwtTransform& transform,
                              const CostConfig& config, const EffectiveHamiltonian* reference = nullptr,
                              std::uint64_t evaluation = 0, const NumericPolicy& policy = default_policy());

}  // namespace swt
