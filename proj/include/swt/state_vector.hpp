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

#include "swt/linalg.hpp"
#include "swt/numeric_policy.hpp"
#include "swt/pauli.hpp"
#include "swt/rng.hpp"

namespace swt {

/// 2^n complex amplitudes; qubit 1 is the most significant index bit.
/// A state is normalized to 1e-10 unless explicitly constructed as
/// unnormalized (projected intermediate states).
class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int n_qubits, const NumericPolicy& policy = default_policy());

  static StateVector basis_state(int n_qubits, std::uint64_t index);
  /// "0110" with qubit 1 leftmost.
  static StateVector from_bitstring(std::string_view bits);
  /// Checks the 2-norm against 1 (kContract otherwise).
  static StateVector from_amplitudes(ComplexVector amplitudes);
  static StateVector unnormalized(ComplexVector amplitudes);

  int n_qubits() const { return n_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::uint64_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }
  bool is_unnormalized() const { return unnormalized_; }
  double norm() const { return amplitudes_.norm(); }

  /// Rescales to unit norm and clears the unnormalized flag.
  StateVector normalized() const;

  /// Raw access for in-place kernels. Callers keep the norm invariant or
  /// mark the state unnormalized.
  ComplexVector& data() { return amplitudes_; }
  void mark_unnormalized() { unnormalized_ = true; }

 private:
  StateVector(int n_qubits, ComplexVector amplitudes, bool unnormalized);

  int n_;
  ComplexVector amplitudes_;
  bool unnormalized_ = false;
};

/// Measurement plan for expectation estimates.
struct ShotPlan {
  /// Number of shots; std::nullopt selects exact expectation values.
  std::optional<std::uint64_t> shots;
  std::uint64_t rng_seed = 0;
  /// Independent per-qubit readout flip probability, in [0, 0.5).
  double readout_flip_prob = 0.0;
  /// Probability of a random non-identity two-qubit Pauli after each
  /// entangling step, in [0, 1).
  double pauli_error_prob = 0.0;

  static ShotPlan exact() { return {}; }
  static ShotPlan sampled(std::uint64_t shots, std::uint64_t seed) { return {shots, seed, 0.0, 0.0}; }

  bool is_exact() const { return !shots.has_value(); }
  bool is_noisy() const { return readout_flip_prob > 0.0 || pauli_error_prob > 0.0; }
  /// Throws kConfig for out-of-range fields.
  void validate() const;
};

Complex inner_product(const StateVector& a, const StateVector& b);

/// exp(+i sigma angle / 2) |state>.
StateVector apply_pauli_rotation(StateVector state, const PauliString& sigma, double angle);
/// sigma |state>.
StateVector apply_pauli_string(StateVector state, const PauliString& sigma);

void apply_hadamard_inplace(StateVector& state, int qubit);
/// S^dagger = diag(1, -i).
void apply_sdg_inplace(StateVector& state, int qubit);

/// On a joint register whose first `n_ancilla` qubits are control qubits and
/// whose remaining qubits hold the data, applies controlled
/// unitary^{power_schedule[a]} from ancilla a (0-based from the most
/// significant). With the binary schedule {2^{l-1}, ..., 2, 1} the result is
/// sum_x |x><x| (x) unitary^x.
StateVector apply_dense_controlled(StateVector joint, const DenseOperator& unitary, int n_ancilla,
                                   std::span<const std::uint64_t> power_schedule,
                                   const NumericPolicy& policy = default_policy());
std::vector<std::uint64_t> binary_power_schedule(int n_ancilla);

/// Fourier transform of the leading `n_ancilla` qubits:
/// |x> -> 2^{-l/2} sum_k exp(sign * 2 pi i x k / 2^l) |k>, sign = +-1.
StateVector apply_register_fourier(StateVector joint, int n_ancilla, int sign);

/// Multiplies every |k> (x) |data> component by diagonal[k].
StateVector apply_register_diagonal(StateVector joint, int n_ancilla, const ComplexVector& diagonal);

/// <state|sigma|state>, real part.
double exact_expectation(const StateVector& state, const PauliString& sigma);

/// Estimate of <sigma>. Exact plans return exact_expectation. Shot plans
/// rotate each non-identity letter to the Z basis, sample bitstrings from the
/// exact distribution, flip each measured bit with readout_flip_prob and
/// average the +-1 parities. Pauli errors are ignored here (they belong to
/// circuit execution, see ansatz.hpp).
double estimate_expectation(const StateVector& state, const PauliString& sigma, const ShotPlan& plan,
                            RngStream& rng);
double estimate_expectation(const StateVector& state, const PauliString& sigma, const ShotPlan& plan);

/// Sum of `shots` sampled +-1 parities of sigma on `state`; the building
/// block of estimate_expectation, exposed for trajectory grouping.
std::int64_t sample_parity_sum(const StateVector& state, const PauliString& sigma, std::uint64_t shots,
                               double readout_flip_prob, RngStream& rng);

}  // namespace swt
