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

#include "swt/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Eigenvalues>

#include "swt/dense_reference.hpp"
#include "swt/errors.hpp"

namespace swt {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_ancillas(int l) {
  require(l >= 1 && l <= 30, ErrorKind::kConfig, "ancilla count must lie in [1, 30]");
}

// |+>^l (x) |psi>, estimate with `unitary`, apply `gate` to the register,
// un-estimate, and project the ancillas back onto |+>^l.
QpeOutput run_pipeline(const StateVector& state, const DenseOperator& unitary, int l, const ComplexVector& gate,
                       const NumericPolicy& policy) {
  check_ancillas(l);
  const int n = state.n_qubits();
  require(l + n <= policy.max_state_qubits, ErrorKind::kResource,
          "joint register of " + std::to_string(l + n) + " qubits exceeds the cap of " +
              std::to_string(policy.max_state_qubits));
  require(unitary.rows() == state.dimension(), ErrorKind::kDimension,
          "phase-estimation unitary does not match the data register");
  const Eigen::Index size = Eigen::Index{1} << l;
  const double amp = 1.0 / std::sqrt(static_cast<double>(size));

  ComplexVector joint(size * state.dimension());
  for (Eigen::Index x = 0; x < size; ++x) joint.segment(x * state.dimension(), state.dimension()) = amp * state.amplitudes();
  StateVector s = StateVector::unnormalized(std::move(joint));

  const std::vector<std::uint64_t> powers = binary_power_schedule(l);
  s = apply_dense_controlled(std::move(s), unitary, l, powers, policy);
  s = apply_register_fourier(std::move(s), l, +1);
  s = apply_register_diagonal(std::move(s), l, gate);
  s = apply_register_fourier(std::move(s), l, -1);
  s = apply_dense_controlled(std::move(s), unitary.adjoint(), l, powers, policy);

  ComplexVector proj = ComplexVector::Zero(state.dimension());
  for (Eigen::Index x = 0; x < size; ++x) proj += s.amplitudes().segment(x * state.dimension(), state.dimension());
  proj *= amp;
  const double in = state.amplitudes().squaredNorm();
  QpeOutput out{StateVector::unnormalized(std::move(proj)), 0.0, {}};
  out.ancilla_leakage = std::max(0.0, 1.0 - out.data.amplitudes().squaredNorm() / in);
  return out;
}

}  // namespace

void QpeConfig::validate(const DenseOperator& h, const NumericPolicy& policy) const {
  check_ancillas(l);
  require(time_scale > 0.0, ErrorKind::kConfig, "QPE time scale must be positive");
  require(k_threshold >= 0 && k_threshold < (1 << l), ErrorKind::kConfig, "k_threshold out of range");
  const SpectralDecomposition s = eigh(h, policy);
  const double lo = (s.eigenvalues[0] - energy_shift) * time_scale;
  const double hi = (s.eigenvalues[s.size() - 1] - energy_shift) * time_scale;
  require(lo >= -1e-12 && hi < kTwoPi, ErrorKind::kContract,
          "scaled spectrum does not fit in [0, 2 pi)");
}

double QpeConfig::register_position(double energy) const {
  return std::ldexp(1.0, l) * (energy - energy_shift) * time_scale / kTwoPi;
}

QpeConfig schedule_time(const DenseOperator& h, int l, double threshold_energy, const NumericPolicy& policy) {
  check_ancillas(l);
  const SpectralDecomposition s = eigh(h, policy);
  const double e_min = s.eigenvalues[0];
  const double e_max = s.eigenvalues[s.size() - 1];
  require(e_max - e_min > policy.cluster_tolerance, ErrorKind::kContract,
          "cannot schedule phase estimation on a spectrum of zero width");
  require(threshold_energy > e_min && threshold_energy < e_max, ErrorKind::kConfig,
          "threshold energy must lie strictly inside the spectrum");
  QpeConfig c;
  c.l = l;
  c.energy_shift = e_min;
  c.time_scale = kTwoPi * (1.0 - std::ldexp(1.0, -l)) / (e_max - e_min);
  const double k = std::ceil(c.register_position(threshold_energy));
  c.k_threshold = static_cast<int>(std::clamp(k, 0.0, std::ldexp(1.0, l) - 1));
  return c;
}

DenseOperator phase_flip_gate(int l, int k_threshold) {
  check_ancillas(l);
  const int size = 1 << l;
  require(k_threshold >= 0 && k_threshold <= size, ErrorKind::kConfig, "k_threshold out of range");
  DenseOperator gate = DenseOperator::Zero(size, size);
  for (int k = 0; k < size; ++k) gate(k, k) = k < k_threshold ? 1.0 : -1.0;
  return gate;
}

QpeOutput reflection_via_qpe(const StateVector& state, const DenseOperator& h, const QpeConfig& config,
                             const NumericPolicy& policy) {
  config.validate(h, policy);
  const DenseOperator shifted = h - config.energy_shift * DenseOperator::Identity(h.rows(), h.cols());
  const DenseOperator u = evolution_operator(shifted, config.time_scale, policy);
  const ComplexVector gate = phase_flip_gate(config.l, config.k_threshold).diagonal();
  QpeOutput out = run_pipeline(state, u, config.l, gate, policy);

  const SpectralDecomposition s = eigh(h, policy);
  const double boundary = config.k_threshold - 0.5;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (std::abs(config.register_position(s.eigenvalues[k]) - boundary) < 0.5) {
      out.warnings.push_back("eigenvalue " + format_coefficient(s.eigenvalues[k]) +
                             " lies within half a register bin of the threshold");
    }
  }
  return out;
}

QpeOutput swt_via_qpe(const StateVector& state, const DenseOperator& reflection_product, int l,
                      PhaseBranch branch, const NumericPolicy& policy) {
  check_ancillas(l);
  const Eigen::Index size = Eigen::Index{1} << l;
  ComplexVector gate(size);
  for (Eigen::Index k = 0; k < size; ++k) {
    double theta = -kTwoPi * static_cast<double>(k) / static_cast<double>(size);
    if (branch == PhaseBranch::kPrincipal && theta <= -std::numbers::pi) theta += kTwoPi;
    gate[k] = std::polar(1.0, theta / 2);
  }
  QpeOutput out = run_pipeline(state, reflection_product, l, gate, policy);

  Eigen::ComplexEigenSolver<DenseOperator> eig(reflection_product, false);
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    if (std::numbers::pi - std::abs(std::arg(eig.eigenvalues()[k])) <= policy.branch_guard) {
      out.warnings.push_back("an eigenphase of the reflection product is within the branch guard of pi");
      break;
    }
  }
  return out;
}

DenseOperator qpe_reflection_operator(const DenseOperator& h, const QpeConfig& config, const NumericPolicy& policy) {
  const int n = qubit_count_of_dimension(h.rows());
  check_dense_cap(n, policy);
  DenseOperator r(h.rows(), h.cols());
  for (Eigen::Index b = 0; b < h.rows(); ++b) {
    r.col(b) = reflection_via_qpe(StateVector::basis_state(n, static_cast<std::uint64_t>(b)), h, config, policy)
                   .data.amplitudes();
  }
  return r;
}

std::vector<double> heff_pauli_reconstruction(const PauliSum& h, const DenseOperator& u, const SubspaceBasis& basis,
                                              const std::vector<PauliString>& ansatz_set,
                                              const NumericPolicy& policy) {
  const int n = basis.n_qubits();
  require(h.n_qubits() == n, ErrorKind::kDimension, "Hamiltonian does not match the basis");
  check_dense_cap(n, policy);
  const Eigen::Index dim = Eigen::Index{1} << n;
  require(u.rows() == dim && u.cols() == dim, ErrorKind::kDimension, "transformation does not match the basis");
  require(is_unitary(u, 1e-9), ErrorKind::kContract, "transformation is not unitary");
  if (ansatz_set.empty()) return {};

  const DenseOperator p0 = projector_from_basis(basis, policy);
  const DenseOperator eye = DenseOperator::Identity(dim, dim);
  const double norm = std::ldexp(1.0, -n);
  std::vector<DenseOperator> blocks;
  for (const PauliTerm& t : h.terms()) {
    const DenseOperator rho = (to_dense(t.string, policy) + eye) * norm;
    blocks.push_back(p0 * u * rho * u.adjoint() * p0);
  }
  // Tr(tau M) = sum_c phase(c) M(c, c ^ x).
  const auto trace_with = [](const PauliString& tau, const DenseOperator& m) {
    Complex tr = 0.0;
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(m.rows()); ++c) {
      tr += tau.basis_phase(c) * m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ tau.x_mask()));
    }
    return tr;
  };

  std::vector<double> g;
  g.reserve(ansatz_set.size());
  for (const PauliString& tau : ansatz_set) {
    require(tau.n_qubits() == n, ErrorKind::kDimension, "ansatz string " + tau.letters() + " has the wrong size");
    const Complex base = norm * trace_with(tau, p0);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      sum += h.terms()[i].coefficient * (trace_with(tau, blocks[i]) - base);
    }
    g.push_back(sum.real());
  }
  return g;
}

std::vector<PauliString> pauli_basis_completion(const std::vector<PauliString>& seed, int n_qubits) {
  check_qubit_count(n_qubits);
  require(n_qubits <= 12, ErrorKind::kResource, "a complete Pauli basis is limited to 12 qubits");
  std::set<PauliString> seen;
  std::vector<PauliString> out;
  for (const PauliString& s : seed) {
    require(s.n_qubits() == n_qubits, ErrorKind::kDimension, "seed string has the wrong size");
    if (seen.insert(s).second) out.push_back(s);
  }
  std::vector<PauliString> all;
  const std::uint64_t count = std::uint64_t{1} << (2 * n_qubits);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t x = 0, z = 0;
    for (int q = 0; q < n_qubits; ++q) {
      const auto letter = (code >> (2 * q)) & 3;
      if (letter == 1 || letter == 2) x |= std::uint64_t{1} << q;
      if (letter == 2 || letter == 3) z |= std::uint64_t{1} << q;
    }
    all.push_back(PauliString::from_masks(n_qubits, x, z));
  }
  std::sort(all.begin(), all.end());
  for (const PauliString& s : all) {
    if (!seen.count(s)) out.push_back(s);
  }
  return out;
}

DenseOperator restrict_to_basis(const std::vector<PauliString>& strings, const std::vector<double>& coefficients,
                                const SubspaceBasis& basis) {
  require(strings.size() == coefficients.size(), ErrorKind::kDimension, "one coefficient per string required");
  const int m = basis.size();
  DenseOperator out = DenseOperator::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    ComplexVector acc = ComplexVector::Zero(basis.state(j).dimension());
    for (std::size_t k = 0; k < strings.size(); ++k) {
      acc += coefficients[k] * apply_pauli(strings[k], basis.state(j).amplitudes());
    }
    for (int i = 0; i < m; ++i) out(i, j) = basis.state(i).amplitudes().dot(acc);
  }
  return out;
}

}  // namespace swt
