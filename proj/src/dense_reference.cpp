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

#include "swt/dense_reference.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "swt/errors.hpp"

namespace swt {

DenseOperator projector_from_columns(const DenseOperator& vectors, const NumericPolicy& policy) {
  const DenseOperator gram = vectors.adjoint() * vectors;
  const DenseOperator eye = DenseOperator::Identity(gram.rows(), gram.cols());
  require(max_abs(gram - eye) <= policy.orthonormal_tolerance, ErrorKind::kContract,
          "projector vectors are not orthonormal");
  return vectors * vectors.adjoint();
}

DenseOperator projector_from_basis(const SubspaceBasis& basis, const NumericPolicy& policy) {
  check_dense_cap(basis.n_qubits(), policy);
  return projector_from_columns(basis.columns(), policy);
}

DenseOperator spectral_projector(const SpectralDecomposition& s, int first, int count,
                                 const NumericPolicy& policy) {
  require(first >= 0 && count >= 1 && first + count <= s.size(), ErrorKind::kDimension,
          "spectral window out of range");
  return projector_from_columns(s.eigenvectors.middleCols(first, count), policy);
}

int projector_rank(const DenseOperator& p) {
  return static_cast<int>(std::lround(p.trace().real()));
}

DenseOperator reflection(const DenseOperator& p) {
  return 2.0 * p - DenseOperator::Identity(p.rows(), p.cols());
}

DenseOperator direct_rotation(const DenseOperator& p0, const DenseOperator& p, const NumericPolicy& policy) {
  require(p0.rows() == p.rows() && p0.cols() == p.cols() && p0.rows() == p0.cols(),
          ErrorKind::kDimension, "projectors have different shapes");
  check_dense_cap(qubit_count_of_dimension(p0.rows()), policy);
  require(projector_rank(p0) == projector_rank(p), ErrorKind::kDimension,
          "projectors have different ranks");

  const DenseOperator w = reflection(p0) * reflection(p);
  // W is unitary, hence normal: its Schur form is diagonal.
  Eigen::ComplexSchur<DenseOperator> schur(w);
  require(schur.info() == Eigen::Success, ErrorKind::kContract, "Schur decomposition failed");
  const DenseOperator& z = schur.matrixU();
  const DenseOperator& t = schur.matrixT();
  ComplexVector half(t.rows());
  for (Eigen::Index k = 0; k < t.rows(); ++k) {
    const double phase = std::arg(t(k, k));
    require(std::numbers::pi - std::abs(phase) > policy.branch_guard, ErrorKind::kBranch,
            "eigenphase of R_P0 R_P is within the branch guard of pi");
    half[k] = std::polar(1.0, phase / 2);
  }
  return z * half.asDiagonal() * z.adjoint();
}

EffectiveHamiltonian exact_effective_hamiltonian(const DenseOperator& h, const DenseOperator& u,
                                                 const SubspaceBasis& basis, const NumericPolicy& policy) {
  require(h.rows() == u.rows() && h.rows() == (Eigen::Index{1} << basis.n_qubits()),
          ErrorKind::kDimension, "operator sizes do not match the basis");
  require(is_unitary(u, 1e-9), ErrorKind::kContract, "transformation is not unitary");
  // psi_j = U^dagger phi_j, then <psi_i|H|psi_j>.
  const DenseOperator psi = u.adjoint() * basis.columns();
  const DenseOperator m = psi.adjoint() * h * psi;
  return make_effective_hamiltonian(m, basis.labels(), false, policy);
}

GapReport perturbation_gap_report(const PauliSum& h0, const PauliSum& v, double epsilon, int k_below,
                                  int m_size, const NumericPolicy& policy) {
  require(h0.n_qubits() == v.n_qubits(), ErrorKind::kDimension, "H0 and V act on different sizes");
  const WindowSubspace window = window_subspace(to_dense(h0, policy), k_below, m_size, policy);
  const SpectralDecomposition vs = eigh(to_dense(v, policy), policy);
  GapReport r;
  r.gap = window.gap;
  r.v_norm = std::abs(epsilon) * vs.eigenvalues.cwiseAbs().maxCoeff();
  r.condition_met = r.v_norm < r.gap / 2;
  return r;
}

double trace_c(const DenseOperator& h, const DenseOperator& p, int m_size) {
  require(h.rows() == p.rows() && h.cols() == p.cols(), ErrorKind::kDimension,
          "H and P have different shapes");
  require(m_size >= 1, ErrorKind::kDimension, "subspace size must be positive");
  const DenseOperator q = DenseOperator::Identity(p.rows(), p.cols()) - p;
  const DenseOperator phq = p * h * q;
  return phq.squaredNorm() / m_size;
}

ExactSolution solve_exact(const ModelSpec& spec, const NumericPolicy& policy) {
  spec.validate();
  check_dense_cap(spec.n_spins, policy);
  PauliSum h0 = heisenberg_h0(spec.n_spins);
  PauliSum v = heisenberg_v(spec.n_spins);
  PauliSum h = h0 + v.scaled(spec.epsilon);
  DenseOperator h_dense = to_dense(h, policy);
  SubspaceBasis basis = ground_basis(spec.n_spins, policy);
  const int m = basis.size();

  SpectralDecomposition spectrum = eigh(h_dense, policy);
  require(spectrum.eigenvalues[m] - spectrum.eigenvalues[m - 1] >= policy.window_boundary_tolerance,
          ErrorKind::kDegeneracy, "the perturbed low-energy window is not separated");
  DenseOperator p0 = projector_from_basis(basis, policy);
  DenseOperator p = spectral_projector(spectrum, 0, m, policy);
  DenseOperator u = direct_rotation(p0, p, policy);
  EffectiveHamiltonian heff = exact_effective_hamiltonian(h_dense, u, basis, policy);
  GapReport gap = perturbation_gap_report(h0, v, spec.epsilon, 0, m, policy);
  return {spec,
          std::move(h0),
          std::move(v),
          std::move(h),
          std::move(h_dense),
          std::move(basis),
          std::move(spectrum),
          std::move(p0),
          std::move(p),
          std::move(u),
          std::move(heff),
          gap};
}

}  // namespace swt
