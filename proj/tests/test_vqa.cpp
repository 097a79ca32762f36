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

#include "swt/ansatz.hpp"
#include "swt/dense_reference.hpp"
#include "swt/errors.hpp"
#include "swt/vqa.hpp"
#include "test_support.hpp"

namespace swt {
namespace {

class VqaTest : public ::testing::Test {
 protected:
  ExactSolution exact = solve_exact({4, 1.0});
  ParameterizedCircuit preset = preset_n4_ansatz();
  CostConfig exact_config;

  CostConfig shots_config(std::uint64_t shots, std::uint64_t seed) const {
    CostConfig c;
    c.backend = AmplitudeBackend::kGDecompositionShots;
    c.shot_plan = ShotPlan::sampled(shots, seed);
    return c;
  }
  CostConfig g_exact_config() const {
    CostConfig c;
    c.backend = AmplitudeBackend::kGDecompositionShots;
    return c;
  }
};

TEST_F(VqaTest, BackendParsing) {
  EXPECT_EQ(parse_backend("shots"), AmplitudeBackend::kGDecompositionShots);
  EXPECT_EQ(parse_backend("exact_amplitudes"), AmplitudeBackend::kExactAmplitudes);
  EXPECT_EQ(to_string(AmplitudeBackend::kGDecompositionShots), "g_decomposition_shots");
  EXPECT_THROW(parse_backend("magic"), Error);
}

TEST_F(VqaTest, AmplitudeExamplesAtIdentity) {
  const SwtTransform id(preset, {0, 0, 0});
  const PauliString zz = PauliString::from_letters("IZZI");
  EXPECT_NEAR(transition_amplitude(exact.basis, 0, 0, zz, id, exact_config).real(), -1.0, 1e-12);
  EXPECT_NEAR(transition_amplitude(exact.basis, 0, 0, zz, id, g_exact_config()).real(), -1.0, 1e-12);
  const PauliString one(4);
  EXPECT_NEAR(std::abs(transition_amplitude(exact.basis, 0, 3, one, id, exact_config)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(transition_amplitude(exact.basis, 0, 3, one, id, g_exact_config())), 0.0, 1e-15);
}

TEST_F(VqaTest, BackendsAgreeWithoutShots) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 4; ++trial) {
    const SwtTransform t(preset, testing::random_theta(3, gen));
    for (const PauliTerm& term : exact.h.terms()) {
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const Complex a = transition_amplitude(exact.basis, i, j, term.string, t, exact_config);
          const Complex b = transition_amplitude(exact.basis, i, j, term.string, t, g_exact_config());
          EXPECT_NEAR(a.real(), b.real(), 1e-12);
        }
      }
    }
  }
}

TEST_F(VqaTest, MissingRelationIsUnsupported) {
  const SubspaceBasis bare(4, exact.basis.labels(), exact.basis.states());
  const SwtTransform id(preset, {0, 0, 0});
  try {
    transition_amplitude(bare, 0, 1, PauliString::from_letters("ZIII"), id, g_exact_config());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBackendUnsupported);
  }
}

TEST_F(VqaTest, CostEqualsDenseLeakage) {
  std::mt19937_64 gen(22);
  const CostEvaluator eval(exact.basis, exact.h, exact_config);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<double> theta = testing::random_theta(3, gen);
    const DenseOperator uc = circuit_to_dense(preset, theta);
    const double want = trace_c(uc * exact.h_dense * uc.adjoint(), exact.p0, 4);
    EXPECT_NEAR(eval.cost(SwtTransform(preset, theta)), want, 1e-10);
  }
}

TEST_F(VqaTest, CostAtZeroAndAtExactRotation) {
  const CostEvaluator eval(exact.basis, exact.h, exact_config);
  EXPECT_NEAR(eval.cost(SwtTransform(preset, {0, 0, 0})), 6.0, 1e-12);
  EXPECT_LT(eval.cost(SwtTransform(exact.u)), 1e-10);
  const CostEvaluator g_eval(exact.basis, exact.h, g_exact_config());
  EXPECT_LT(g_eval.cost(SwtTransform(exact.u)), 1e-10);
}

TEST_F(VqaTest, EvolutionCost) {
  const SwtTransform id(preset, {0, 0, 0});
  EXPECT_NEAR(cost_evolution(exact.basis, exact.h, id, 0.0), -1.0, 1e-12);
  const SwtTransform ideal(exact.u);
  for (double t : {0.1, 0.7, 2.0}) EXPECT_NEAR(cost_evolution(exact.basis, exact.h, ideal, t), -1.0, 1e-10);
  EXPECT_GT(cost_evolution(exact.basis, exact.h, id, 0.3), -1.0 + 1e-3);
}

TEST_F(VqaTest, MonteCarloPairsIsUnbiased) {
  CostConfig mc;
  mc.monte_carlo_pairs = 4;
  const CostEvaluator full(exact.basis, exact.h, exact_config);
  const CostEvaluator sampled(exact.basis, exact.h, mc);
  const SwtTransform t(preset, {0.3, -0.2, 0.1});
  const double want = full.signed_cost(t);
  const int runs = 4000;
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < runs; ++k) {
    const double c = sampled.signed_cost(t, static_cast<std::uint64_t>(k));
    sum += c;
    sum_sq += c * c;
  }
  const double mean = sum / runs;
  const double sd = std::sqrt(std::max(sum_sq / runs - mean * mean, 0.0));
  EXPECT_NEAR(mean, want, 5 * sd / std::sqrt(runs) + 1e-12);
  EXPECT_GT(sd, 0.0);
}

TEST_F(VqaTest, ReconstructFromExactRotation) {
  const SwtTransform ideal(exact.u);
  for (const CostConfig& config : {exact_config, g_exact_config()}) {
    const HeffEstimate est = reconstruct_heff(exact.basis, exact.h, ideal, config, &exact.heff);
    EXPECT_LT(max_abs(est.heff.matrix - exact.heff.matrix), 1e-10);
    ASSERT_TRUE(est.heff.fidelities.has_value());
    for (double f : *est.heff.fidelities) EXPECT_NEAR(f, 1.0, 1e-10);
    EXPECT_EQ(est.standard_errors.maxCoeff(), 0.0);
  }
}

TEST_F(VqaTest, ShotEstimatesHaveHonestErrors) {
  const SwtTransform t(preset, {0.2, -0.26, 0.29});
  const HeffEstimate ref = reconstruct_heff(exact.basis, exact.h, t, exact_config);
  const HeffEstimate est = reconstruct_heff(exact.basis, exact.h, t, shots_config(4000, 5));
  EXPECT_GT(est.heff.hermiticity_deviation, 0.0);
  EXPECT_LT(max_abs(est.heff.matrix - est.heff.matrix.adjoint()), 1e-12);
  int outside = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double se = est.standard_errors(i, j);
      EXPECT_GT(se, 0.0);
      if (std::abs(est.heff.matrix(i, j).real() - ref.heff.matrix(i, j).real()) > 5 * se) ++outside;
    }
  }
  EXPECT_EQ(outside, 0);
}

TEST_F(VqaTest, FreshShotsPerEvaluation) {
  const CostEvaluator eval(exact.basis, exact.h, shots_config(500, 9));
  const SwtTransform t(preset, {0.1, 0.1, 0.1});
  EXPECT_EQ(eval.cost(t, 3), eval.cost(t, 3));
  EXPECT_NE(eval.cost(t, 3), eval.cost(t, 4));
}

TEST_F(VqaTest, ConfigValidation) {
  CostConfig c;
  c.monte_carlo_pairs = 0;
  EXPECT_THROW(c.validate(4), Error);
}

}  // namespace
}  // namespace swt
