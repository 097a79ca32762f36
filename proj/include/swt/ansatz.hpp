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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swt/linalg.hpp"
#include "swt/pauli.hpp"
#include "swt/rng.hpp"
#include "swt/state_vector.hpp"

namespace swt {

/// exp(i * generator * scale * theta[parameter_index]).
struct CircuitFactor {
  PauliString generator;
  int parameter_index = 0;
  double scale = 0.5;
};

/// U(theta) = F_0 F_1 ... F_{m-1}: factors are stored in the order they are
/// written, so F_{m-1} acts on a state first and F_0 last.
class ParameterizedCircuit {
 public:
  /// The empty circuit (U = I).
  explicit ParameterizedCircuit(int n_qubits);
  ParameterizedCircuit(int n_qubits, std::vector<CircuitFactor> factors, int n_parameters);

  int n_qubits() const { return n_; }
  int n_parameters() const { return n_parameters_; }
  const std::vector<CircuitFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// One "<letters> <parameter_index> <scale>" line per factor.
  std::string to_text() const;

 private:
  int n_;
  std::vector<CircuitFactor> factors_;
  int n_parameters_ = 0;
};

ParameterizedCircuit parse_circuit(std::string_view text);

/// One factor per term of the i-normalized commutator [h0, v], each with its
/// own parameter and scale 1/2, in canonical Pauli order. Commuting inputs
/// give the empty circuit.
ParameterizedCircuit ansatz_from_commutator(const PauliSum& h0, const PauliSum& v);

/// The fixed six-factor, three-parameter ansatz for the 4-spin chain.
ParameterizedCircuit preset_n4_ansatz();

/// U(theta)|state>, or U(theta)^dagger|state> when adjoint is set.
StateVector apply_ansatz(StateVector state, const ParameterizedCircuit& circuit,
                         std::span<const double> theta, bool adjoint);

DenseOperator circuit_to_dense(const ParameterizedCircuit& circuit, std::span<const double> theta,
                               const NumericPolicy& policy = default_policy());

/// Extension: keeps the factors whose parameter moves `cost` by at least
/// `threshold` (central-difference gradient magnitude at theta = 0) and
/// renumbers the surviving parameters.
ParameterizedCircuit prune_by_gradient(const ParameterizedCircuit& circuit,
                                       const std::function<double(std::span<const double>)>& cost,
                                       double threshold = 1e-3);

/// Per-factor error labels for one noisy trajectory: 0 means no error,
/// 1..15 selects a non-identity two-qubit Pauli (first letter k / 4, second
/// k % 4) on the outermost support qubits of that factor.
using ErrorPattern = std::vector<std::uint8_t>;

/// Draws one pattern. Only factors of weight >= 2 can fail.
ErrorPattern draw_error_pattern(const ParameterizedCircuit& circuit, double pauli_error_prob, RngStream& rng);

/// apply_ansatz with each factor followed by its error from `pattern`.
StateVector apply_ansatz_with_errors(StateVector state, const ParameterizedCircuit& circuit,
                                     std::span<const double> theta, bool adjoint,
                                     const ErrorPattern& pattern);

/// Estimate of <sigma> on U^dagger|input> (adjoint) or U|input>. Shot plans
/// with a Pauli error rate draw one error pattern per shot from a stream
/// separate from the measurement stream and sample each distinct pattern
/// once, with as many shots as it was drawn.
double estimate_circuit_expectation(const StateVector& input, const ParameterizedCircuit& circuit,
                                    std::span<const double> theta, bool adjoint, const PauliString& sigma,
                                    const ShotPlan& plan, RngStream& rng);

}  // namespace swt
