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

#include "swt/spsa.hpp"

#include <cmath>

#include "swt/rng.hpp"

namespace swt {

void SpsaOptions::validate() const {
  if (a) require(*a > 0.0, ErrorKind::kConfig, "SPSA gain a must be positive");
  if (big_a) require(*big_a >= 0.0, ErrorKind::kConfig, "SPSA stability constant must be non-negative");
  require(c > 0.0 && alpha > 0.0 && gamma > 0.0, ErrorKind::kConfig, "SPSA c, alpha, gamma must be positive");
  require(max_iter >= 1 && patience >= 1, ErrorKind::kConfig, "SPSA iteration limits must be positive");
  require(calibration_samples >= 1 && target_first_step > 0.0, ErrorKind::kConfig,
          "SPSA calibration settings must be positive");
  require(rel_improvement >= 0.0 && allowed_increase >= 0.0, ErrorKind::kConfig,
          "SPSA tolerances must be non-negative");
}

OptimizerAbort::OptimizerAbort(const std::string& message, OptimizationTrace trace)
    : Error(ErrorKind::kOptimizerAbort, message), trace_(std::move(trace)) {}

OptimizationTrace spsa_minimize(const CostFunction& cost, std::vector<double> theta0, const SpsaOptions& options,
                                const SnapshotFunction& snapshot) {
  options.validate();
  const std::size_t dim = theta0.size();
  OptimizationTrace trace;
  trace.seed = options.seed;
  trace.big_a = options.big_a.value_or(options.max_iter / 10.0);

  const auto evaluate = [&](const std::vector<double>& theta) {
    ++trace.evaluations;
    const double value = cost(theta);
    if (!std::isfinite(value)) {
      trace.final_theta = trace.iterations.empty() ? theta0 : trace.iterations.back().theta;
      throw OptimizerAbort("non-finite cost after " + std::to_string(trace.evaluations) + " evaluations",
                           trace);
    }
    return value;
  };
  const auto record = [&](int step, const std::vector<double>& theta, double value) {
    TraceEntry e{step, theta, value, std::nullopt};
    if (snapshot) e.spectrum = snapshot(theta);
    trace.iterations.push_back(std::move(e));
  };
  const auto perturbed = [&](const std::vector<double>& theta, const std::vector<double>& delta, double scale) {
    std::vector<double> out = theta;
    for (std::size_t p = 0; p < dim; ++p) out[p] += scale * delta[p];
    return out;
  };

  std::vector<double> theta = theta0;
  double current = evaluate(theta);
  record(0, theta, current);
  if (dim == 0) {
    trace.final_theta = theta;
    trace.final_cost = current;
    trace.converged = true;
    return trace;
  }

  RngStream rng(options.seed, 0);
  const auto draw_delta = [&](RngStream& r) {
    std::vector<double> delta(dim);
    for (double& d : delta) d = r.rademacher();
    return delta;
  };

  if (options.a) {
    trace.a = *options.a;
  } else {
    // Each component of the estimate has magnitude |y+ - y-| / (2 c_0).
    RngStream calib(options.seed, 1);
    double mean = 0.0;
    for (int s = 0; s < options.calibration_samples; ++s) {
      const std::vector<double> delta = draw_delta(calib);
      const double diff = evaluate(perturbed(theta, delta, options.c)) - evaluate(perturbed(theta, delta, -options.c));
      mean += std::abs(diff) / (2 * options.c);
    }
    mean /= options.calibration_samples;
    const double a0_factor = std::pow(trace.big_a + 1.0, options.alpha);
    trace.a = mean > 0.0 ? options.target_first_step * a0_factor / mean : options.target_first_step * a0_factor;
  }

  double best = current;
  int stall = 0;
  for (int k = 0; k < options.max_iter; ++k) {
    const double ak = trace.a / std::pow(trace.big_a + k + 1.0, options.alpha);
    const double ck = options.c / std::pow(k + 1.0, options.gamma);
    const std::vector<double> delta = draw_delta(rng);
    const double plus = evaluate(perturbed(theta, delta, ck));
    const double minus = evaluate(perturbed(theta, delta, -ck));
    // delta_p = +-1, so dividing by it is multiplying by it.
    const double slope = (plus - minus) / (2 * ck);
    std::vector<double> candidate = perturbed(theta, delta, -ak * slope);
    const double value = evaluate(candidate);
    if (!options.blocking || value <= current + options.allowed_increase) {
      theta = std::move(candidate);
      current = value;
    }
    record(k + 1, theta, current);

    if (current < best - options.rel_improvement * std::abs(best)) {
      best = current;
      stall = 0;
    } else {
      best = std::min(best, current);
      if (++stall >= options.patience) {
        trace.converged = true;
        break;
      }
    }
  }
  trace.final_theta = theta;
  trace.final_cost = current;
  return trace;
}

}  // namespace swt
