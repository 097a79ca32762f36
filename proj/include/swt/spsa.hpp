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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "swt/errors.hpp"

namespace swt {

struct SpsaOptions {
  /// Step gain numerator; nullopt calibrates it so the first step moves
  /// each parameter by about target_first_step.
  std::optional<double> a;
  double c = 0.1;
  /// Stability constant; nullopt means max_iter / 10.
  std::optional<double> big_a;
  double alpha = 0.602;
  double gamma = 0.101;
  int max_iter = 300;
  /// Iterations without a relative improvement of rel_improvement before stopping.
  int patience = 20;
  double rel_improvement = 1e-4;
  std::uint64_t seed = 0;
  double target_first_step = 0.1;
  int calibration_samples = 10;
  /// Blocking: a candidate is accepted only if its cost does not exceed the
  /// current cost by more than allowed_increase.
  bool blocking = true;
  double allowed_increase = 0.0;

  /// Throws kConfig for non-positive gains or counts.
  void validate() const;
};

struct TraceEntry {
  int step = 0;
  std::vector<double> theta;
  double cost = 0.0;
  std::optional<std::vector<double>> spectrum;
};

struct OptimizationTrace {
  /// Step 0 is the starting point; step k the accepted iterate after k updates.
  std::vector<TraceEntry> iterations;
  std::vector<double> final_theta;
  double final_cost = 0.0;
  bool converged = false;
  std::uint64_t seed = 0;
  double a = 0.0;
  double big_a = 0.0;
  int evaluations = 0;
};

using CostFunction = std::function<double(std::span<const double>)>;
/// Optional per-iteration snapshot (for example the H_eff spectrum).
using SnapshotFunction = std::function<std::vector<double>(std::span<const double>)>;

/// Raised when the cost turns non-finite; carries the trace so far.
class OptimizerAbort : public Error {
 public:
  OptimizerAbort(const std::string& message, OptimizationTrace trace);
  const OptimizationTrace& trace() const { return trace_; }

 private:
  OptimizationTrace trace_;
};

/// Simultaneous-perturbation stochastic approximation with Rademacher
/// perturbations and gains a_k = a / (A + k + 1)^alpha, c_k = c / (k + 1)^gamma.
OptimizationTrace spsa_minimize(const CostFunction& cost, std::vector<double> theta0, const SpsaOptions& options,
                                const SnapshotFunction& snapshot = {});

}  // namespace swt
