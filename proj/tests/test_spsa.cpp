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
#include <limits>

#include "swt/spsa.hpp"

namespace swt {
namespace {

double bowl(std::span<const double> t) {
  double s = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) s += (k + 1.0) * (t[k] - 1.0) * (t[k] - 1.0);
  return s;
}

SpsaOptions options(std::uint64_t seed, int max_iter) {
  SpsaOptions o;
  o.seed = seed;
  o.max_iter = max_iter;
  o.patience = max_iter;
  return o;
}

TEST(Spsa, QuadraticBowl) {
  SpsaOptions o = options(1, 200);
  o.a = 0.5;
  const OptimizationTrace t = spsa_minimize(bowl, {0.0, 0.0, 0.0}, o);
  EXPECT_LT(t.final_cost, 1e-3);
  for (double x : t.final_theta) EXPECT_NEAR(x, 1.0, 0.05);
}

TEST(Spsa, TraceStartsAtStepZeroAndNeverRises) {
  const OptimizationTrace t = spsa_minimize(bowl, {0.0, 0.5}, options(2, 50));
  ASSERT_FALSE(t.iterations.empty());
  EXPECT_EQ(t.iterations.front().step, 0);
  EXPECT_DOUBLE_EQ(t.iterations.front().cost, bowl(std::vector<double>{0.0, 0.5}));
  for (std::size_t k = 1; k < t.iterations.size(); ++k) {
    EXPECT_LE(t.iterations[k].cost, t.iterations[k - 1].cost);
  }
  EXPECT_DOUBLE_EQ(t.final_cost, t.iterations.back().cost);
}

TEST(Spsa, DeterministicForSeed) {
  const OptimizationTrace a = spsa_minimize(bowl, {0.0, 0.0}, options(7, 60));
  const OptimizationTrace b = spsa_minimize(bowl, {0.0, 0.0}, options(7, 60));
  const OptimizationTrace c = spsa_minimize(bowl, {0.0, 0.0}, options(8, 60));
  EXPECT_EQ(a.final_theta, b.final_theta);
  EXPECT_EQ(a.a, b.a);
  EXPECT_NE(a.final_theta, c.final_theta);
}

TEST(Spsa, FlatCostStopsOnPatience) {
  SpsaOptions o = options(3, 300);
  o.patience = 5;
  o.a = 0.1;
  const OptimizationTrace t = spsa_minimize([](std::span<const double>) { return 2.0; }, {0.0}, o);
  EXPECT_TRUE(t.converged);
  EXPECT_LE(t.iterations.size(), 10u);
}

TEST(Spsa, NonFiniteCostAbortsWithTrace) {
  int calls = 0;
  const auto cost = [&](std::span<const double> t) {
    return ++calls > 12 ? std::numeric_limits<double>::quiet_NaN() : bowl(t);
  };
  SpsaOptions o = options(4, 100);
  o.a = 0.05;
  try {
    spsa_minimize(cost, {0.0, 0.0}, o);
    FAIL();
  } catch (const OptimizerAbort& e) {
    EXPECT_FALSE(e.trace().iterations.empty());
  }
}

TEST(Spsa, SnapshotsAreRecorded) {
  SpsaOptions o = options(5, 10);
  const OptimizationTrace t =
      spsa_minimize(bowl, {0.0}, o, [](std::span<const double> x) { return std::vector<double>{x[0]}; });
  for (const TraceEntry& e : t.iterations) {
    ASSERT_TRUE(e.spectrum.has_value());
    EXPECT_EQ((*e.spectrum)[0], e.theta[0]);
  }
}

TEST(Spsa, OptionValidation) {
  SpsaOptions o;
  o.c = 0.0;
  EXPECT_THROW(o.validate(), Error);
  o = SpsaOptions{};
  o.max_iter = 0;
  EXPECT_THROW(o.validate(), Error);
}

}  // namespace
}  // namespace swt
