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

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swt/linalg.hpp"
#include "swt/numeric_policy.hpp"
#include "swt/pauli.hpp"
#include "swt/state_vector.hpp"

namespace swt {

/// Heisenberg chain with two end spins weakly attached: H = H0 + epsilon V.
struct ModelSpec {
  int n_spins = 4;
  double epsilon = 1.0;

  /// Throws kModel for n_spins < 4 or a non-finite epsilon.
  void validate() const;
};

/// 2 sum_{i=2}^{n-2} (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}).
PauliSum heisenberg_h0(int n_spins);
/// XX + YY + ZZ on the links (1,2) and (n-1,n).
PauliSum heisenberg_v(int n_spins);
/// H0 + epsilon V.
PauliSum heisenberg_hamiltonian(const ModelSpec& spec);

/// |to> = g |from>.
struct GRelation {
  int from = 0;
  int to = 0;
  PauliString g = PauliString(1);
};

/// An ordered orthonormal basis of a low-energy subspace.
class SubspaceBasis {
 public:
  /// Validates orthonormality and every relation (kContract on failure).
  SubspaceBasis(int n_qubits, std::vector<std::string> labels, std::vector<StateVector> states,
                std::vector<GRelation> relations = {}, const NumericPolicy& policy = default_policy());

  int n_qubits() const { return n_; }
  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<StateVector>& states() const { return states_; }
  const StateVector& state(int i) const;
  const std::vector<GRelation>& relations() const { return relations_; }

  /// G with |phi_j> = G |phi_i>, when recorded.
  std::optional<PauliString> relation(int i, int j) const;

  /// 2^n x M matrix whose columns are the basis states.
  DenseOperator columns() const;

 private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<StateVector> states_;
  std::vector<GRelation> relations_;
};

/// The four states |mu> (x) |GS> (x) |nu>, ordered (mu,nu) = 00, 01, 10, 11,
/// where |GS> is the ground state of the middle chain (spins 2..n-1). All
/// ordered pairs carry G in {X_1, X_n, X_1 X_n}. Throws kDegeneracy if the
/// middle chain has a degenerate ground state.
SubspaceBasis ground_basis(int n_spins, const NumericPolicy& policy = default_policy());

struct WindowSubspace {
  SubspaceBasis basis;
  /// Distance to the nearest eigenvalue outside the window; infinity when
  /// the window is the whole space.
  double gap;
  SpectralDecomposition spectrum;
};

/// Eigenvectors K+1..K+M (1-based, ascending) of h0. Throws kDegeneracy when
/// a window boundary falls inside a degenerate cluster.
WindowSubspace window_subspace(const DenseOperator& h0, int k_below, int m_size,
                               const NumericPolicy& policy = default_policy());

struct BitstringSpec {
  std::string bits;
};
struct BasisMemberSpec {
  std::reference_wrapper<const SubspaceBasis> basis;
  int index;
};
/// (|phi_i> + sign G|phi_i>)/sqrt2.
struct GSuperpositionSpec {
  std::reference_wrapper<const SubspaceBasis> basis;
  int index;
  PauliString g = PauliString(1);
  int sign;
};
using StateSpec = std::variant<BitstringSpec, BasisMemberSpec, GSuperpositionSpec>;

struct PreparedState {
  StateVector state;
  /// (I +- G)/2 |phi> = norm_factor * state; 1 for plain states.
  double norm_factor = 1.0;
};

PreparedState prepare_state(const StateSpec& spec);

}  // namespace swt
