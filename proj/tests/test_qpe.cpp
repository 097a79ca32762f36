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

#include <cmath>
#include <numbers>

#include "swt/dense_reference.hpp"
#include "swt/errors.hpp"
#include "swt/qpe.hpp"
#include "test_support.hpp"

namespace swt {
namespace {

DenseOperator diag(std::initializer_list<double> values) {
  DenseOperator d = DenseOperator::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (double v : values) d(k, k) = v, ++k;
  return d;
}

TEST(PhaseFlipGate, Cases) {
  EXPECT_LT(max_abs(phase_flip_gate(2, 2) - diag({1, 1, -1, -1})), 1e-15);
  EXPECT_LT(max_abs(phase_flip_gate(2, 0) + DenseOperator::Identity(4, 4)), 1e-15);
  EXPECT_LT(max_abs(phase_flip_gate(2, 4) - DenseOperator::Identity(4, 4)), 1e-15);
}

TEST(Schedule, Arithmetic) {
  const DenseOperator h = diag({-1, 0, 2, 6});
  const QpeConfig c = schedule_time(h, 3, 1.0);
  EXPECT_DOUBLE_EQ(c.energy_shift, -1.0);
  EXPECT_NEAR(c.time_scale, 2 * std::numbers::pi * (1 - 1.0 / 8) / 7, 1e-15);
  // 8 * 2 * (7/8) / 7 = 2
  EXPECT_EQ(c.k_threshold, 2);
  EXPECT_NEAR(c.register_position(6.0), 7.0, 1e-12);
  EXPECT_NO_THROW(c.validate(h));
  EXPECT_THROW(schedule_time(h, 3, 9.0), Error);
  EXPECT_THROW(schedule_time(DenseOperator::Identity(2, 2), 3, 1.0), Error);
}

TEST(Reflection, GridAlignedSpectrumIsExact) {
  const DenseOperator h = diag({0, 1, 2, 3});
  const QpeConfig c = schedule_time(h, 2, 1.5);
  ASSERT_EQ(c.k_threshold, 2);
  std::mt19937_64 gen(31);
  const StateVector s = StateVector::from_amplitudes(testing::random_state(2, gen));
  const QpeOutput out = reflection_via_qpe(s, h, c);
  const ComplexVector want = diag({1, 1, -1, -1}) * s.amplitudes();
  EXPECT_LT((out.data.amplitudes() - want).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(out.ancilla_leakage, 0.0, 1e-12);
  EXPECT_TRUE(out.warnings.empty());
}

TEST(Reflection, OffGridEigenvalueWarnsAndLeaks) {
  const DenseOperator h4 = diag({0, 1.45, 2, 3});
  const QpeConfig c = schedule_time(h4, 2, 1.5);
  const QpeOutput out = reflection_via_qpe(StateVector::basis_state(2, 1), h4, c);
  EXPECT_FALSE(out.warnings.empty());
  EXPECT_GT(out.ancilla_leakage, 1e-3);
  EXPECT_NEAR(out.ancilla_leakage, 1.0 - out.data.norm() * out.data.norm(), 1e-12);
}

// The error is not monotone in l: off-grid eigenvalues land at different
// distances from the threshold bin.
TEST(Reflection, ModelGroundProjectorIsApproximated) {
  const ExactSolution s = solve_exact({4, 1.0});
  const DenseOperator r = reflection(s.p);
  for (int l : {4, 6, 8}) {
    const QpeConfig c = schedule_time(s.h_dense, l, -2.0);
    const DenseOperator approx = qpe_reflection_operator(s.h_dense, c);
    EXPECT_LT((approx - r).norm(), 0.05) << l;
  }
}

TEST(SwtViaQpe, IdentityProductReturnsInput) {
  std::mt19937_64 gen(32);
  const StateVector s = StateVector::from_amplitudes(testing::random_state(2, gen));
  const QpeOutput out = swt_via_qpe(s, DenseOperator::Identity(4, 4), 3);
  EXPECT_LT((out.data.amplitudes() - s.amplitudes()).norm(), 1e-12);
}

TEST(SwtViaQpe, SingleQubitRotationOnGrid) {
  const double h = std::numbers::sqrt2 / 2;
  ComplexVector plus(2);
  plus << h, h;
  const DenseOperator z = testing::kron_pauli("Z");
  const DenseOperator x = testing::kron_pauli("X");
  const DenseOperator w = z * x;  // reflections about |0> and |+>
  const StateVector in = StateVector::from_amplitudes(plus);
  const QpeOutput principal = swt_via_qpe(in, w, 2, PhaseBranch::kPrincipal);
  EXPECT_NEAR(std::abs(principal.data.amplitude(0) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(principal.data.amplitude(1)), 0.0, 1e-12);
  EXPECT_NEAR(principal.ancilla_leakage, 0.0, 1e-12);

  const QpeOutput literal = swt_via_qpe(in, w, 2, PhaseBranch::kLiteral);
  EXPECT_LT(std::abs(literal.data.amplitude(0)), 0.5);
}

TEST(PauliReconstruction, IdentityStringOnUnrotatedFrame) {
  const ExactSolution s = solve_exact({4, 1.0});
  const std::vector<double> g =
      heff_pauli_reconstruction(s.h0, DenseOperator::Identity(16, 16), s.basis, {PauliString(4)});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_NEAR(g[0], -1.5, 1e-12);
  EXPECT_TRUE(heff_pauli_reconstruction(s.h0, s.u, s.basis, {}).empty());
}

TEST(PauliReconstruction, CompletionReproducesHeff) {
  const ExactSolution s = solve_exact({4, 1.0});
  const std::vector<PauliString> strings = pauli_basis_completion({PauliString::from_letters("IZZI")}, 4);
  ASSERT_EQ(strings.size(), 256u);
  EXPECT_EQ(strings.front().letters(), "IZZI");
  const std::vector<double> g = heff_pauli_reconstruction(s.h, s.u, s.basis, strings);
  const DenseOperator restricted = restrict_to_basis(strings, g, s.basis);
  EXPECT_LT(max_abs(restricted - s.heff.matrix), 1e-10);
}

TEST(PauliReconstruction, CompletionRejectsLargeRegisters) {
  EXPECT_THROW(pauli_basis_completion({}, 13), Error);
}

}  // namespace
}  // namespace swt
