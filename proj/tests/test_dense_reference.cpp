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

#include <gtest/gtest.h>

#include <numbers>

#include "swt/dense_reference.hpp"
#include "swt/errors.hpp"
#include "test_support.hpp"

namespace swt {
namespace {

DenseOperator ket_projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector ket(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index k = 0;
  for (Complex a : amps) v[k++] = a;
  return v;
}

TEST(Projectors, RankAndIdempotence) {
  const SubspaceBasis b = ground_basis(4);
  const DenseOperator p = projector_from_basis(b);
  EXPECT_EQ(projector_rank(p), 4);
  EXPECT_LT(max_abs(p * p - p), 1e-12);
  EXPECT_LT(max_abs(p - p.adjoint()), 1e-15);
  const DenseOperator r = reflection(p);
  EXPECT_LT(max_abs(r * r - DenseOperator::Identity(16, 16)), 1e-12);
}

TEST(DirectRotation, SingleQubitPlusToZero) {
  const double h = std::numbers::sqrt2 / 2;
  const DenseOperator p0 = ket_projector(ket({1, 0}));
  const DenseOperator p = ket_projector(ket({h, h}));
  const DenseOperator u = direct_rotation(p0, p);
  const ComplexVector image = u * ket({h, h});
  EXPECT_NEAR(image[0].real(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(image[1]), 0.0, 1e-12);
  // exp(i pi/4 Y)
  EXPECT_LT(max_abs(u - testing::expm_i(testing::kron_pauli("Y"), std::numbers::pi / 4)), 1e-12);
}

TEST(DirectRotation, BranchGuard) {
  const DenseOperator p0 = ket_projector(ket({1, 0}));
  const DenseOperator p = ket_projector(ket({0, 1}));
  try {
    direct_rotation(p0, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBranch);
  }
}

TEST(DirectRotation, RankMismatch) {
  try {
    direct_rotation(ket_projector(ket({1, 0})), DenseOperator::Identity(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimension);
  }
}

TEST(DirectRotation, ModelIdentities) {
  const ExactSolution s = solve_exact({4, 1.0});
  const DenseOperator eye = DenseOperator::Identity(16, 16);
  EXPECT_LT(max_abs(s.u * s.u.adjoint() - eye), 1e-12);
  EXPECT_LT(max_abs(s.u * s.p * s.u.adjoint() - s.p0), 1e-12);
  EXPECT_LT(max_abs(s.u * s.u - reflection(s.p0) * reflection(s.p)), 1e-12);
  // U H U^dagger is block diagonal with respect to P0.
  const DenseOperator rotated = s.u * s.h_dense * s.u.adjoint();
  EXPECT_LT(max_abs(s.p0 * rotated * (eye - s.p0)), 1e-11);
}

TEST(ExactHeff, SpectrumAndEntries) {
  const ExactSolution s = solve_exact({4, 1.0});
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(s.heff.eigenvalues[k], s.spectrum.eigenvalues[k], 1e-10);
  EXPECT_NEAR(s.heff.eigenvalues[0], -8.0, 1e-10);
  EXPECT_NEAR(s.heff.eigenvalues[1], -2.0 - 2.0 * std::sqrt(5.0), 1e-10);
  EXPECT_NEAR(s.heff.matrix(1, 2).real(), 0.763932, 1e-5);
  EXPECT_NEAR(s.heff.matrix(0, 0).real(), -6.472136, 1e-5);
  EXPECT_NEAR(s.heff.matrix(1, 1).real(), -7.236068, 1e-5);
  EXPECT_LT(s.heff.hermiticity_deviation, 1e-12);
}

TEST(ExactHeff, PhaseConventionOnlyConjugates) {
  const ExactSolution s = solve_exact({4, 1.0});
  std::vector<StateVector> states;
  ComplexVector phases(4);
  for (int i = 0; i < 4; ++i) {
    phases[i] = std::polar(1.0, 0.4 * (i + 1));
    states.push_back(StateVector::from_amplitudes(phases[i] * s.basis.state(i).amplitudes()));
  }
  const SubspaceBasis shifted(4, s.basis.labels(), states);
  const EffectiveHamiltonian h = exact_effective_hamiltonian(s.h_dense, s.u, shifted);
  const DenseOperator d = phases.asDiagonal();
  EXPECT_LT(max_abs(h.matrix - d.adjoint() * s.heff.matrix * d), 1e-12);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(h.eigenvalues[k], s.heff.eigenvalues[k], 1e-12);
}

TEST(ExactHeff, CommutingPerturbationGivesIdentity) {
  DenseOperator h0 = testing::kron_pauli("ZI") + 2.0 * testing::kron_pauli("IZ");
  const DenseOperator h = h0 + 0.1 * testing::kron_pauli("ZZ");
  const WindowSubspace w = window_subspace(h0, 0, 1);
  const DenseOperator p0 = projector_from_basis(w.basis);
  const DenseOperator p = spectral_projector(eigh(h), 0, 1);
  const DenseOperator u = direct_rotation(p0, p);
  EXPECT_LT(max_abs(u - DenseOperator::Identity(4, 4)), 1e-12);
}

TEST(GapReport, Thresholds) {
  const PauliSum h0 = heisenberg_h0(4);
  const PauliSum v = heisenberg_v(4);
  const GapReport zero = perturbation_gap_report(h0, v, 0.0, 0, 4);
  EXPECT_NEAR(zero.gap, 8.0, 1e-12);
  EXPECT_TRUE(zero.condition_met);
  EXPECT_TRUE(perturbation_gap_report(h0, v, 0.5, 0, 4).condition_met);
  EXPECT_FALSE(perturbation_gap_report(h0, v, 1.0, 0, 4).condition_met);
}

TEST(TraceC, Examples) {
  const DenseOperator x = testing::kron_pauli("X");
  EXPECT_NEAR(trace_c(x, ket_projector(ket({1, 0})), 1), 1.0, 1e-15);
  const DenseOperator z = testing::kron_pauli("Z");
  EXPECT_NEAR(trace_c(z, ket_projector(ket({1, 0})), 1), 0.0, 1e-15);
  // Exact rotation block-diagonalizes: the rotated H has no leakage.
  const ExactSolution s = solve_exact({4, 1.0});
  EXPECT_LT(trace_c(s.u * s.h_dense * s.u.adjoint(), s.p0, 4), 1e-18);
  EXPECT_GT(trace_c(s.h_dense, s.p0, 4), 1.0);
}

}  // namespace
}  // namespace swt
