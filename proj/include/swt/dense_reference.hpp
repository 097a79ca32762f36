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

#include "swt/effective_hamiltonian.hpp"
#include "swt/linalg.hpp"
#include "swt/numeric_policy.hpp"
#include "swt/pauli.hpp"
#include "swt/spin_models.hpp"

namespace swt {

/// sum_k |v_k><v_k| over the columns of `vectors`, which must be orthonormal.
DenseOperator projector_from_columns(const DenseOperator& vectors,
                                     const NumericPolicy& policy = default_policy());
DenseOperator projector_from_basis(const SubspaceBasis& basis,
                                   const NumericPolicy& policy = default_policy());
/// Projector onto the eigenvectors with indices [first, first + count).
DenseOperator spectral_projector(const SpectralDecomposition& s, int first, int count,
                                 const NumericPolicy& policy = default_policy());

/// Rank of a projector, read off its trace.
int projector_rank(const DenseOperator& p);

/// 2P - I.
DenseOperator reflection(const DenseOperator& p);

/// Principal square root of R_P0 R_P. The result maps range(P) onto
/// range(P0). Throws kDimension when the ranks differ and kBranch when an
/// eigenphase of R_P0 R_P lies within the branch guard of pi.
DenseOperator direct_rotation(const DenseOperator& p0, const DenseOperator& p,
                              const NumericPolicy& policy = default_policy());

/// Matrix <phi_i|U H U^dagger|phi_j> and its spectrum.
EffectiveHamiltonian exact_effective_hamiltonian(const DenseOperator& h, const DenseOperator& u,
                                                 const SubspaceBasis& basis,
                                                 const NumericPolicy& policy = default_policy());

struct GapReport {
  double gap = 0.0;
  double v_norm = 0.0;
  /// ||epsilon V|| < gap / 2; advisory only.
  bool condition_met = false;
};

GapReport perturbation_gap_report(const PauliSum& h0, const PauliSum& v, double epsilon, int k_below,
                                  int m_size, const NumericPolicy& policy = default_policy());

/// (1/M) Tr(PHQ QHP) with Q = I - P.
double trace_c(const DenseOperator& h, const DenseOperator& p, int m_size);

/// Everything the exact pipeline produces for a ground-space model.
struct ExactSolution {
  ModelSpec spec;
  PauliSum h0;
  PauliSum v;
  PauliSum h;
  DenseOperator h_dense;
  SubspaceBasis basis;
  SpectralDecomposition spectrum;
  DenseOperator p0;
  DenseOperator p;
  DenseOperator u;
  EffectiveHamiltonian heff;
  GapReport gap;
};

ExactSolution solve_exact(const ModelSpec& spec, const NumericPolicy& policy = default_policy());

}  // namespace swt
