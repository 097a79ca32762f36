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

#include "swt/effective_hamiltonian.hpp"

#include <cmath>

#include "swt/errors.hpp"

namespace swt {

EffectiveHamiltonian make_effective_hamiltonian(const DenseOperator& matrix,
                                                std::vector<std::string> labels, bool hermitize,
                                                const NumericPolicy& policy) {
  require(matrix.rows() == matrix.cols() && matrix.rows() > 0, ErrorKind::kDimension,
          "effective Hamiltonian must be square");
  require(labels.size() == static_cast<std::size_t>(matrix.rows()), ErrorKind::kDimension,
          "one label per effective-Hamiltonian row required");
  require(matrix.allFinite(), ErrorKind::kContract, "effective Hamiltonian has non-finite entries");

  EffectiveHamiltonian out;
  out.basis_labels = std::move(labels);
  out.hermiticity_deviation = hermiticity_defect(matrix);
  if (hermitize) {
    out.matrix = (matrix + matrix.adjoint()) / 2.0;
  } else {
    require(out.hermiticity_deviation <= policy.hermitian_tolerance, ErrorKind::kContract,
            "effective Hamiltonian is not Hermitian");
    out.matrix = matrix;
  }
  SpectralDecomposition s = eigh(out.matrix, policy);
  out.eigenvalues = std::move(s.eigenvalues);
  out.eigenvectors = std::move(s.eigenvectors);
  return out;
}

std::vector<double> eigenstate_fidelities(const EffectiveHamiltonian& candidate,
                                          const EffectiveHamiltonian& reference,
                                          const NumericPolicy& policy) {
  require(candidate.dim() == reference.dim(), ErrorKind::kDimension,
          "fidelity comparison of different sizes");
  const int m = reference.dim();
  const RealVector& e = reference.eigenvalues;
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    int lo = k, hi = k;
    while (lo > 0 && e[lo] - e[lo - 1] <= policy.cluster_tolerance) --lo;
    while (hi + 1 < m && e[hi + 1] - e[hi] <= policy.cluster_tolerance) ++hi;
    double f = 0.0;
    for (int r = lo; r <= hi; ++r) {
      f += std::norm(reference.eigenvectors.col(r).dot(candidate.eigenvectors.col(k)));
    }
    out[static_cast<std::size_t>(k)] = f;
  }
  return out;
}

EffectiveHamiltonian with_fidelities(EffectiveHamiltonian candidate, const EffectiveHamiltonian& reference,
                                     const NumericPolicy& policy) {
  candidate.fidelities = eigenstate_fidelities(candidate, reference, policy);
  return candidate;
}

}  // namespace swt
