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

#include "swt/linalg.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "swt/errors.hpp"

namespace swt {

int qubit_count_of_dimension(Eigen::Index dim) {
  require(dim >= 1, ErrorKind::kDimension, "empty operator");
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d *= 2;
    ++n;
  }
  require(d == dim, ErrorKind::kDimension,
          "dimension " + std::to_string(dim) + " is not a power of two");
  return n;
}

void check_dense_cap(int n_qubits, const NumericPolicy& policy) {
  require(n_qubits <= policy.max_dense_qubits, ErrorKind::kResource,
          "dense operator on " + std::to_string(n_qubits) + " qubits exceeds cap of " +
              std::to_string(policy.max_dense_qubits));
}

double max_abs(const DenseOperator& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const DenseOperator& a) {
  return max_abs(a - a.adjoint());
}

bool is_unitary(const DenseOperator& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  DenseOperator id = DenseOperator::Identity(u.rows(), u.cols());
  return max_abs(u.adjoint() * u - id) < tolerance;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    // Ties resolved towards the lower index; 1e-12 absorbs rounding.
    double mag = std::abs(v[k]);
    if (mag > best_mag + 1e-12) {
      best_mag = mag;
      best = k;
    }
  }
  if (best_mag <= 0.0) return;
  v *= std::conj(v[best]) / std::abs(v[best]);
  v[best] = Complex(std::abs(v[best]), 0.0);
}

SpectralDecomposition eigh(const DenseOperator& a, const NumericPolicy& policy) {
  require(a.rows() == a.cols(), ErrorKind::kDimension, "eigh requires a square matrix");
  double defect = hermiticity_defect(a);
  require(defect <= policy.hermitian_tolerance, ErrorKind::kContract,
          "eigh input is not Hermitian (defect " + std::to_string(defect) + ")");

  DenseOperator sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(sym);
  require(solver.info() == Eigen::Success, ErrorKind::kContract, "eigensolver did not converge");

  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  const Eigen::Index n = out.size();

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && out.eigenvalues[stop] - out.eigenvalues[stop - 1] <= policy.cluster_tolerance)
      ++stop;
    for (Eigen::Index k = start; k < stop; ++k) {
      ComplexVector v = out.eigenvectors.col(k);
      for (Eigen::Index j = start; j < k; ++j) {
        v -= out.eigenvectors.col(j).dot(v) * out.eigenvectors.col(j);
      }
      v.normalize();
      fix_phase(v);
      out.eigenvectors.col(k) = v;
    }
    start = stop;
  }
  return out;
}

DenseOperator evolution_operator(const DenseOperator& h, double t, const NumericPolicy& policy) {
  SpectralDecomposition spec = eigh(h, policy);
  ComplexVector phases(spec.size());
  for (Eigen::Index k = 0; k < spec.size(); ++k)
    phases[k] = std::exp(Complex(0.0, -spec.eigenvalues[k] * t));
  return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

DenseOperator matrix_power(const DenseOperator& a, std::uint64_t exponent) {
  require(a.rows() == a.cols(), ErrorKind::kDimension, "matrix_power requires a square matrix");
  DenseOperator result = DenseOperator::Identity(a.rows(), a.cols());
  DenseOperator base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace swt
