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

#include "swt/spin_models.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "swt/errors.hpp"

namespace swt {
namespace {

void check_spins(int n_spins) {
  require(n_spins >= 4, ErrorKind::kModel,
          "the model needs at least 4 spins, got " + std::to_string(n_spins));
  check_qubit_count(n_spins);
}

void add_link(std::vector<PauliTerm>& terms, int n, int a, int b, double coefficient) {
  for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
    terms.push_back({coefficient, PauliString(n).with_letter(a, l).with_letter(b, l)});
  }
}

// Open Heisenberg chain 2 sum (XX + YY + ZZ) on m qubits.
PauliSum chain_hamiltonian(int m) {
  std::vector<PauliTerm> terms;
  for (int q = 1; q < m; ++q) add_link(terms, m, q, q + 1, 2.0);
  return PauliSum(m, std::move(terms));
}

}  // namespace

void ModelSpec::validate() const {
  check_spins(n_spins);
  require(std::isfinite(epsilon), ErrorKind::kModel, "epsilon must be finite");
}

PauliSum heisenberg_h0(int n_spins) {
  check_spins(n_spins);
  std::vector<PauliTerm> terms;
  for (int q = 2; q <= n_spins - 2; ++q) add_link(terms, n_spins, q, q + 1, 2.0);
  return PauliSum(n_spins, std::move(terms));
}

PauliSum heisenberg_v(int n_spins) {
  check_spins(n_spins);
  std::vector<PauliTerm> terms;
  add_link(terms, n_spins, 1, 2, 1.0);
  add_link(terms, n_spins, n_spins - 1, n_spins, 1.0);
  return PauliSum(n_spins, std::move(terms));
}

PauliSum heisenberg_hamiltonian(const ModelSpec& spec) {
  spec.validate();
  return heisenberg_h0(spec.n_spins) + heisenberg_v(spec.n_spins).scaled(spec.epsilon);
}

SubspaceBasis::SubspaceBasis(int n_qubits, std::vector<std::string> labels,
                             std::vector<StateVector> states, std::vector<GRelation> relations,
                             const NumericPolicy& policy)
    : n_(n_qubits),
      labels_(std::move(labels)),
      states_(std::move(states)),
      relations_(std::move(relations)) {
  require(!states_.empty(), ErrorKind::kDimension, "a subspace basis needs at least one state");
  require(labels_.size() == states_.size(), ErrorKind::kDimension,
          "one label per basis state required");
  for (const StateVector& s : states_) {
    require(s.n_qubits() == n_, ErrorKind::kDimension, "basis state has the wrong qubit count");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = i; j < states_.size(); ++j) {
      const Complex overlap = inner_product(states_[i], states_[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      require(std::abs(overlap - target) <= policy.orthonormal_tolerance, ErrorKind::kContract,
              "basis states " + labels_[i] + " and " + labels_[j] + " are not orthonormal");
    }
  }
  for (const GRelation& r : relations_) {
    require(r.from >= 0 && r.from < size() && r.to >= 0 && r.to < size(), ErrorKind::kDimension,
            "G relation index out of range");
    require(r.g.n_qubits() == n_, ErrorKind::kDimension, "G relation has the wrong qubit count");
    const ComplexVector mapped = apply_pauli(r.g, state(r.from).amplitudes());
    require((mapped - state(r.to).amplitudes()).norm() <= policy.orthonormal_tolerance,
            ErrorKind::kContract,
            "G = " + r.g.letters() + " does not map " + labels_[static_cast<std::size_t>(r.from)] +
                " to " + labels_[static_cast<std::size_t>(r.to)]);
  }
}

const StateVector& SubspaceBasis::state(int i) const {
  require(i >= 0 && i < size(), ErrorKind::kDimension, "basis index out of range");
  return states_[static_cast<std::size_t>(i)];
}

std::optional<PauliString> SubspaceBasis::relation(int i, int j) const {
  for (const GRelation& r : relations_) {
    if (r.from == i && r.to == j) return r.g;
  }
  return std::nullopt;
}

DenseOperator SubspaceBasis::columns() const {
  DenseOperator out(states_.front().dimension(), size());
  for (int k = 0; k < size(); ++k) out.col(k) = state(k).amplitudes();
  return out;
}

SubspaceBasis ground_basis(int n_spins, const NumericPolicy& policy) {
  check_spins(n_spins);
  require(n_spins <= policy.max_state_qubits, ErrorKind::kResource,
          "ground basis on " + std::to_string(n_spins) + " spins exceeds the state cap");
  const int m = n_spins - 2;
  check_dense_cap(m, policy);
  const SpectralDecomposition chain = eigh(to_dense(chain_hamiltonian(m), policy), policy);
  require(chain.eigenvalues[1] - chain.eigenvalues[0] >= policy.ground_gap_tolerance,
          ErrorKind::kDegeneracy,
          "middle chain of " + std::to_string(m) + " spins has a degenerate ground state");
  const ComplexVector gs = chain.eigenvectors.col(0);

  const Eigen::Index dim = Eigen::Index{1} << n_spins;
  const Eigen::Index top = Eigen::Index{1} << (n_spins - 1);
  std::vector<std::string> labels;
  std::vector<StateVector> states;
  for (int mu = 0; mu < 2; ++mu) {
    for (int nu = 0; nu < 2; ++nu) {
      ComplexVector amps = ComplexVector::Zero(dim);
      for (Eigen::Index g = 0; g < gs.size(); ++g) amps[mu * top + 2 * g + nu] = gs[g];
      labels.push_back(std::to_string(mu) + std::to_string(nu));
      states.push_back(StateVector::from_amplitudes(std::move(amps)));
    }
  }

  std::vector<GRelation> relations;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      PauliString g(n_spins);
      if (((i ^ j) & 2) != 0) g = g.with_letter(1, PauliLetter::X);
      if (((i ^ j) & 1) != 0) g = g.with_letter(n_spins, PauliLetter::X);
      relations.push_back({i, j, g});
    }
  }
  return SubspaceBasis(n_spins, std::move(labels), std::move(states), std::move(relations), policy);
}

WindowSubspace window_subspace(const DenseOperator& h0, int k_below, int m_size,
                               const NumericPolicy& policy) {
  const int n = qubit_count_of_dimension(h0.rows());
  check_dense_cap(n, policy);
  const auto dim = static_cast<int>(h0.rows());
  require(k_below >= 0 && m_size >= 1 && k_below + m_size <= dim, ErrorKind::kDimension,
          "energy window does not fit the spectrum");
  SpectralDecomposition spec = eigh(h0, policy);
  const RealVector& e = spec.eigenvalues;

  double gap = std::numeric_limits<double>::infinity();
  if (k_below > 0) {
    const double lower = e[k_below] - e[k_below - 1];
    require(lower >= policy.window_boundary_tolerance, ErrorKind::kDegeneracy,
            "energy window lower boundary splits a degenerate level");
    gap = std::min(gap, lower);
  }
  if (k_below + m_size < dim) {
    const double upper = e[k_below + m_size] - e[k_below + m_size - 1];
    require(upper >= policy.window_boundary_tolerance, ErrorKind::kDegeneracy,
            "energy window upper boundary splits a degenerate level");
    gap = std::min(gap, upper);
  }

  std::vector<std::string> labels;
  std::vector<StateVector> states;
  for (int k = 0; k < m_size; ++k) {
    labels.push_back("E" + std::to_string(k_below + k + 1));
    states.push_back(StateVector::from_amplitudes(spec.eigenvectors.col(k_below + k)));
  }
  return {SubspaceBasis(n, std::move(labels), std::move(states), {}, policy), gap, std::move(spec)};
}

PreparedState prepare_state(const StateSpec& spec) {
  if (const auto* b = std::get_if<BitstringSpec>(&spec)) {
    return {StateVector::from_bitstring(b->bits), 1.0};
  }
  if (const auto* m = std::get_if<BasisMemberSpec>(&spec)) {
    return {m->basis.get().state(m->index), 1.0};
  }
  const auto& g = std::get<GSuperpositionSpec>(spec);
  const SubspaceBasis& basis = g.basis.get();
  require(g.sign == 1 || g.sign == -1, ErrorKind::kContract, "superposition sign must be +1 or -1");
  bool known = false;
  for (const GRelation& r : basis.relations()) {
    if (r.from == g.index && r.g == g.g) known = true;
  }
  require(known, ErrorKind::kContract,
          "G = " + g.g.letters() + " is not a recorded relation of basis state " +
              std::to_string(g.index));
  const ComplexVector& phi = basis.state(g.index).amplitudes();
  ComplexVector amps = (phi + static_cast<double>(g.sign) * apply_pauli(g.g, phi)) / std::numbers::sqrt2;
  return {StateVector::from_amplitudes(std::move(amps)), std::numbers::sqrt2 / 2};
}

}  // namespace swt
