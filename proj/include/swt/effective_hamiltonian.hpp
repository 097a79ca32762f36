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

#include <optional>
#include <string>
#include <vector>

#include "swt/linalg.hpp"
#include "swt/numeric_policy.hpp"

namespace swt {

/// M x M effective Hamiltonian in a subspace basis, with its spectrum.
struct EffectiveHamiltonian {
  DenseOperator matrix;
  std::vector<std::string> basis_labels;
  RealVector eigenvalues;
  /// Columns are eigenvectors in basis coordinates.
  DenseOperator eigenvectors;
  /// max |X - X^dagger| of the raw matrix before Hermitization.
  double hermiticity_deviation = 0.0;
  /// Per-eigenstate overlap with a reference, ascending order.
  std::optional<std::vector<double>> fidelities;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Diagonalizes `matrix`. With hermitize = false a defect above the policy
/// tolerance throws kContract; with hermitize = true the matrix is replaced
/// by (X + X^dagger)/2 and the defect is recorded.
EffectiveHamiltonian make_effective_hamiltonian(const DenseOperator& matrix,
                                                std::vector<std::string> labels, bool hermitize,
                                                const NumericPolicy& policy = default_policy());

/// Fidelity of each eigenvector of `candidate` against the reference, pairing
/// states in ascending-eigenvalue order. When reference state k sits in a
/// degenerate cluster C, the fidelity is sum_{m in C} |<r_m|v_k>|^2.
std::vector<double> eigenstate_fidelities(const EffectiveHamiltonian& candidate,
                                          const EffectiveHamiltonian& reference,
                                          const NumericPolicy& policy = default_policy());

/// Returns `candidate` with fidelities filled in.
EffectiveHamiltonian with_fidelities(EffectiveHamiltonian candidate, const EffectiveHamiltonian& reference,
                                     const NumericPolicy& policy = default_policy());

}  // namespace swt
