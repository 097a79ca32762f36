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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "swt/numeric_policy.hpp"

namespace swt {

using Complex = std::complex<double>;
/// Dense 2^n x 2^n complex matrix. Row/column index b encodes the
/// computational basis state with qubit 1 as the most significant bit.
using DenseOperator = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues in ascending order with orthonormal eigenvector columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  DenseOperator eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }
};

/// Number of qubits n with dim = 2^n; throws kDimension otherwise.
int qubit_count_of_dimension(Eigen::Index dim);

/// Throws kResource when 2^n x 2^n exceeds the dense cap.
void check_dense_cap(int n_qubits, const NumericPolicy& policy = default_policy());

double max_abs(const DenseOperator& a);
double hermiticity_defect(const DenseOperator& a);
bool is_unitary(const DenseOperator& u, double tolerance);

/// Hermitian eigendecomposition. Eigenvalues ascend; within a degenerate
/// cluster the eigenvectors are re-orthonormalized by Gram-Schmidt in the
/// solver's output order, and every eigenvector is phase-fixed so that its
/// first largest-magnitude component is real and positive.
SpectralDecomposition eigh(const DenseOperator& a, const NumericPolicy& policy = default_policy());

/// exp(-i h t) for Hermitian h, through its eigendecomposition.
DenseOperator evolution_operator(const DenseOperator& h, double t,
                                 const NumericPolicy& policy = default_policy());

/// Multiplies a state by a phase so that its first largest-magnitude
/// amplitude becomes real and positive.
void fix_phase(Eigen::Ref<ComplexVector> v);

/// Integer matrix power by repeated squaring.
DenseOperator matrix_power(const DenseOperator& a, std::uint64_t exponent);

}  // namespace swt
