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

#include "swt/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "swt/errors.hpp"

namespace swt {
namespace {

void check_state_cap(int n_qubits, const NumericPolicy& policy) {
  require(n_qubits >= 1, ErrorKind::kDimension, "a state needs at least one qubit");
  require(n_qubits <= policy.max_state_qubits, ErrorKind::kResource,
          "a " + std::to_string(n_qubits) + "-qubit state exceeds the cap of " +
              std::to_string(policy.max_state_qubits) + " qubits");
}

void check_qubit(const StateVector& s, int qubit) {
  require(qubit >= 1 && qubit <= s.n_qubits(), ErrorKind::kDimension,
          "qubit " + std::to_string(qubit) + " out of range");
}

void check_register(const StateVector& joint, int n_ancilla) {
  require(n_ancilla >= 1 && n_ancilla < joint.n_qubits(), ErrorKind::kDimension,
          "ancilla register of " + std::to_string(n_ancilla) + " qubits does not fit a " +
              std::to_string(joint.n_qubits()) + "-qubit state");
}

// Columns are ancilla values x, rows are data indices d: amplitude x*D + d.
Eigen::Map<DenseOperator> as_blocks(StateVector& joint, int n_ancilla) {
  const Eigen::Index rows = Eigen::Index{1} << (joint.n_qubits() - n_ancilla);
  const Eigen::Index cols = Eigen::Index{1} << n_ancilla;
  return Eigen::Map<DenseOperator>(joint.data().data(), rows, cols);
}

}  // namespace

StateVector::StateVector(int n_qubits, const NumericPolicy& policy) : n_(n_qubits) {
  check_state_cap(n_qubits, policy);
  amplitudes_ = ComplexVector::Zero(Eigen::Index{1} << n_qubits);
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, ComplexVector amplitudes, bool unnormalized)
    : n_(n_qubits), amplitudes_(std::move(amplitudes)), unnormalized_(unnormalized) {}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  require(index < (std::uint64_t{1} << n_qubits), ErrorKind::kDimension,
          "basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::from_bitstring(std::string_view bits) {
  require(!bits.empty() && bits.size() <= 64, ErrorKind::kParse, "empty or oversized bitstring");
  std::uint64_t index = 0;
  for (char c : bits) {
    require(c == '0' || c == '1', ErrorKind::kParse, "bitstring characters must be 0 or 1");
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return basis_state(static_cast<int>(bits.size()), index);
}

StateVector StateVector::from_amplitudes(ComplexVector amplitudes) {
  const int n = qubit_count_of_dimension(amplitudes.size());
  check_state_cap(n, default_policy());
  require(std::abs(amplitudes.norm() - 1.0) <= default_policy().orthonormal_tolerance,
          ErrorKind::kContract, "state amplitudes are not normalized");
  return StateVector(n, std::move(amplitudes), false);
}

StateVector StateVector::unnormalized(ComplexVector amplitudes) {
  const int n = qubit_count_of_dimension(amplitudes.size());
  check_state_cap(n, default_policy());
  return StateVector(n, std::move(amplitudes), true);
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  require(nrm > 0.0, ErrorKind::kContract, "cannot normalize a zero state");
  return StateVector(n_, amplitudes_ / nrm, false);
}

void ShotPlan::validate() const {
  if (shots) require(*shots > 0, ErrorKind::kConfig, "shot count must be positive");
  require(readout_flip_prob >= 0.0 && readout_flip_prob < 0.5, ErrorKind::kConfig,
          "readout flip probability must lie in [0, 0.5)");
  require(pauli_error_prob >= 0.0 && pauli_error_prob < 1.0, ErrorKind::kConfig,
          "Pauli error probability must lie in [0, 1)");
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require(a.n_qubits() == b.n_qubits(), ErrorKind::kDimension, "inner product of different sizes");
  return a.amplitudes().dot(b.amplitudes());
}

StateVector apply_pauli_rotation(StateVector state, const PauliString& sigma, double angle) {
  require(sigma.n_qubits() == state.n_qubits(), ErrorKind::kDimension,
          "rotation generator does not match the state size");
  const ComplexVector flipped = apply_pauli(sigma, state.amplitudes());
  state.data() = std::cos(angle / 2) * state.amplitudes() +
                 Complex(0.0, std::sin(angle / 2)) * flipped;
  return state;
}

StateVector apply_pauli_string(StateVector state, const PauliString& sigma) {
  require(sigma.n_qubits() == state.n_qubits(), ErrorKind::kDimension,
          "Pauli string does not match the state size");
  state.data() = apply_pauli(sigma, state.amplitudes());
  return state;
}

void apply_hadamard_inplace(StateVector& state, int qubit) {
  check_qubit(state, qubit);
  const std::uint64_t bit = std::uint64_t{1} << (state.n_qubits() - qubit);
  const double r = std::numbers::sqrt2 / 2;
  ComplexVector& a = state.data();
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(a.size()); ++b) {
    if (b & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(b);
    const auto i1 = static_cast<Eigen::Index>(b | bit);
    const Complex u = a[i0], v = a[i1];
    a[i0] = r * (u + v);
    a[i1] = r * (u - v);
  }
}

void apply_sdg_inplace(StateVector& state, int qubit) {
  check_qubit(state, qubit);
  const std::uint64_t bit = std::uint64_t{1} << (state.n_qubits() - qubit);
  ComplexVector& a = state.data();
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(a.size()); ++b) {
    if (b & bit) a[static_cast<Eigen::Index>(b)] *= Complex(0.0, -1.0);
  }
}

std::vector<std::uint64_t> binary_power_schedule(int n_ancilla) {
  require(n_ancilla >= 1 && n_ancilla < 64, ErrorKind::kDimension, "bad ancilla count");
  std::vector<std::uint64_t> powers(static_cast<std::size_t>(n_ancilla));
  for (int a = 0; a < n_ancilla; ++a) powers[static_cast<std::size_t>(a)] = std::uint64_t{1} << (n_ancilla - 1 - a);
  return powers;
}

StateVector apply_dense_controlled(StateVector joint, const DenseOperator& unitary, int n_ancilla,
                                   std::span<const std::uint64_t> power_schedule,
                                   const NumericPolicy& policy) {
  check_register(joint, n_ancilla);
  const int n_data = joint.n_qubits() - n_ancilla;
  check_dense_cap(n_data, policy);
  require(unitary.rows() == (Eigen::Index{1} << n_data) && unitary.cols() == unitary.rows(),
          ErrorKind::kDimension, "controlled unitary does not match the data register");
  require(power_schedule.size() == static_cast<std::size_t>(n_ancilla), ErrorKind::kDimension,
          "power schedule needs one entry per ancilla");

  auto blocks = as_blocks(joint, n_ancilla);
  const std::uint64_t n_values = std::uint64_t{1} << n_ancilla;
  for (int a = 0; a < n_ancilla; ++a) {
    const std::uint64_t power = power_schedule[static_cast<std::size_t>(a)];
    if (power == 0) continue;
    const DenseOperator step = matrix_power(unitary, power);
    const std::uint64_t bit = std::uint64_t{1} << (n_ancilla - 1 - a);
    for (std::uint64_t x = 0; x < n_values; ++x) {
      if (!(x & bit)) continue;
      const auto col = static_cast<Eigen::Index>(x);
      blocks.col(col) = (step * blocks.col(col)).eval();
    }
  }
  return joint;
}

StateVector apply_register_fourier(StateVector joint, int n_ancilla, int sign) {
  check_register(joint, n_ancilla);
  require(sign == 1 || sign == -1, ErrorKind::kContract, "Fourier sign must be +1 or -1");
  const Eigen::Index size = Eigen::Index{1} << n_ancilla;
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  DenseOperator f(size, size);
  for (Eigen::Index k = 0; k < size; ++k) {
    for (Eigen::Index x = 0; x < size; ++x) {
      // Reduce kx mod N before the division to keep the angle exact.
      const auto kx = static_cast<double>((k * x) % size);
      const double angle = sign * 2.0 * std::numbers::pi * kx / static_cast<double>(size);
      f(k, x) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  auto blocks = as_blocks(joint, n_ancilla);
  blocks = (blocks * f.transpose()).eval();
  return joint;
}

StateVector apply_register_diagonal(StateVector joint, int n_ancilla, const ComplexVector& diagonal) {
  check_register(joint, n_ancilla);
  require(diagonal.size() == (Eigen::Index{1} << n_ancilla), ErrorKind::kDimension,
          "register diagonal has the wrong length");
  auto blocks = as_blocks(joint, n_ancilla);
  for (Eigen::Index k = 0; k < diagonal.size(); ++k) blocks.col(k) *= diagonal[k];
  bool unitary = true;
  for (Eigen::Index k = 0; k < diagonal.size(); ++k) {
    if (std::abs(std::abs(diagonal[k]) - 1.0) > 1e-12) unitary = false;
  }
  if (!unitary) joint.mark_unnormalized();
  return joint;
}

double exact_expectation(const StateVector& state, const PauliString& sigma) {
  require(sigma.n_qubits() == state.n_qubits(), ErrorKind::kDimension,
          "observable does not match the state size");
  return pauli_matrix_element(state.amplitudes(), sigma, state.amplitudes()).real();
}

std::int64_t sample_parity_sum(const StateVector& state, const PauliString& sigma, std::uint64_t shots,
                               double readout_flip_prob, RngStream& rng) {
  require(sigma.n_qubits() == state.n_qubits(), ErrorKind::kDimension,
          "observable does not match the state size");
  StateVector rotated = state;
  for (int q : sigma.support()) {
    const PauliLetter l = sigma.letter(q);
    if (l == PauliLetter::Y) apply_sdg_inplace(rotated, q);
    if (l != PauliLetter::Z) apply_hadamard_inplace(rotated, q);
  }
  const ComplexVector& amps = rotated.amplitudes();
  std::vector<double> cdf(static_cast<std::size_t>(amps.size()));
  double total = 0.0;
  for (Eigen::Index b = 0; b < amps.size(); ++b) {
    total += std::norm(amps[b]);
    cdf[static_cast<std::size_t>(b)] = total;
  }
  require(total > 0.0, ErrorKind::kContract, "cannot sample from a zero state");

  const std::uint64_t support_mask = sigma.x_mask() | sigma.z_mask();
  const std::vector<int> qubits = sigma.support();
  const int n = state.n_qubits();
  std::int64_t sum = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    std::uint64_t outcome = static_cast<std::uint64_t>(it - cdf.begin());
    if (readout_flip_prob > 0.0) {
      for (int q : qubits) {
        if (rng.uniform() < readout_flip_prob) outcome ^= std::uint64_t{1} << (n - q);
      }
    }
    sum += (std::popcount(outcome & support_mask) & 1) ? -1 : 1;
  }
  return sum;
}

double estimate_expectation(const StateVector& state, const PauliString& sigma, const ShotPlan& plan,
                            RngStream& rng) {
  plan.validate();
  if (plan.is_exact() || sigma.is_identity()) return exact_expectation(state, sigma);
  const std::uint64_t shots = *plan.shots;
  return static_cast<double>(sample_parity_sum(state, sigma, shots, plan.readout_flip_prob, rng)) /
         static_cast<double>(shots);
}

double estimate_expectation(const StateVector& state, const PauliString& sigma, const ShotPlan& plan) {
  RngStream rng(plan.rng_seed, 0);
  return estimate_expectation(state, sigma, plan, rng);
}

}  // namespace swt
