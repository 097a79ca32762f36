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

#include "swt/ansatz.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "swt/errors.hpp"

namespace swt {
namespace {

void check_theta(const ParameterizedCircuit& c, std::span<const double> theta) {
  require(theta.size() == static_cast<std::size_t>(c.n_parameters()), ErrorKind::kDimension,
          "expected " + std::to_string(c.n_parameters()) + " parameters, got " +
              std::to_string(theta.size()));
}

double factor_angle(const CircuitFactor& f, std::span<const double> theta) {
  // apply_pauli_rotation(s, a) realizes exp(i s a / 2).
  return 2.0 * f.scale * theta[static_cast<std::size_t>(f.parameter_index)];
}

PauliString error_string(const CircuitFactor& f, std::uint8_t label) {
  const std::vector<int> support = f.generator.support();
  const auto first = static_cast<PauliLetter>(label / 4);
  const auto second = static_cast<PauliLetter>(label % 4);
  PauliString e(f.generator.n_qubits());
  if (first != PauliLetter::I) e = e.with_letter(support.front(), first);
  if (second != PauliLetter::I) e = e.with_letter(support.back(), second);
  return e;
}

template <typename Visit>
void for_each_applied(const ParameterizedCircuit& c, bool adjoint, Visit&& visit) {
  const auto m = static_cast<std::ptrdiff_t>(c.factors().size());
  if (adjoint) {
    for (std::ptrdiff_t k = 0; k < m; ++k) visit(static_cast<std::size_t>(k), -1.0);
  } else {
    for (std::ptrdiff_t k = m - 1; k >= 0; --k) visit(static_cast<std::size_t>(k), 1.0);
  }
}

}  // namespace

ParameterizedCircuit::ParameterizedCircuit(int n_qubits) : n_(n_qubits) { check_qubit_count(n_qubits); }

ParameterizedCircuit::ParameterizedCircuit(int n_qubits, std::vector<CircuitFactor> factors, int n_parameters)
    : n_(n_qubits), factors_(std::move(factors)), n_parameters_(n_parameters) {
  check_qubit_count(n_qubits);
  require(n_parameters >= 0, ErrorKind::kDimension, "negative parameter count");
  std::vector<bool> used(static_cast<std::size_t>(n_parameters), false);
  for (const CircuitFactor& f : factors_) {
    require(f.generator.n_qubits() == n_, ErrorKind::kDimension,
            "factor " + f.generator.letters() + " has the wrong qubit count");
    require(!f.generator.is_identity(), ErrorKind::kContract, "identity generator in a circuit");
    require(f.parameter_index >= 0 && f.parameter_index < n_parameters, ErrorKind::kDimension,
            "parameter index out of range");
    used[static_cast<std::size_t>(f.parameter_index)] = true;
  }
  for (bool u : used) require(u, ErrorKind::kContract, "every parameter must drive a factor");
}

std::string ParameterizedCircuit::to_text() const {
  std::string out;
  for (const CircuitFactor& f : factors_) {
    out += f.generator.letters() + ' ' + std::to_string(f.parameter_index) + ' ' +
           format_coefficient(f.scale) + '\n';
  }
  return out;
}

ParameterizedCircuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<CircuitFactor> factors;
  int n = -1;
  int n_parameters = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string letters, index_text, scale_text, extra;
    if (!(fields >> letters) || letters.front() == '#') continue;
    const std::string where = "circuit line " + std::to_string(line_no);
    require(static_cast<bool>(fields >> index_text >> scale_text) && !(fields >> extra),
            ErrorKind::kParse, where + ": expected '<letters> <index> <scale>'");
    int index = 0;
    double scale = 0.0;
    auto r1 = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    auto r2 = std::from_chars(scale_text.data(), scale_text.data() + scale_text.size(), scale);
    require(r1.ec == std::errc{} && r1.ptr == index_text.data() + index_text.size() &&
                r2.ec == std::errc{} && r2.ptr == scale_text.data() + scale_text.size(),
            ErrorKind::kParse, where + ": bad number");
    PauliString g = PauliString::from_letters(letters);
    if (n < 0) n = g.n_qubits();
    require(g.n_qubits() == n, ErrorKind::kParse, where + ": inconsistent qubit count");
    n_parameters = std::max(n_parameters, index + 1);
    factors.push_back({g, index, scale});
  }
  require(n > 0, ErrorKind::kParse, "circuit text has no factors");
  return ParameterizedCircuit(n, std::move(factors), n_parameters);
}

ParameterizedCircuit ansatz_from_commutator(const PauliSum& h0, const PauliSum& v) {
  const PauliSum comm = hermitian_commutator(h0, v);
  std::vector<CircuitFactor> factors;
  for (const PauliTerm& t : comm.terms()) {
    factors.push_back({t.string, static_cast<int>(factors.size()), 0.5});
  }
  const int count = static_cast<int>(factors.size());
  return ParameterizedCircuit(h0.n_qubits(), std::move(factors), count);
}

ParameterizedCircuit preset_n4_ansatz() {
  const auto f = [](const char* letters, int index) {
    return CircuitFactor{PauliString::from_letters(letters), index, 0.5};
  };
  return ParameterizedCircuit(4,
                              {f("IZYX", 0), f("IZXY", 1), f("IYXZ", 2), f("ZXYI", 2), f("YXZI", 1),
                               f("XYZI", 0)},
                              3);
}

StateVector apply_ansatz(StateVector state, const ParameterizedCircuit& circuit,
                         std::span<const double> theta, bool adjoint) {
  check_theta(circuit, theta);
  require(state.n_qubits() == circuit.n_qubits(), ErrorKind::kDimension,
          "circuit does not match the state size");
  for_each_applied(circuit, adjoint, [&](std::size_t k, double sign) {
    const CircuitFactor& f = circuit.factors()[k];
    state = apply_pauli_rotation(std::move(state), f.generator, sign * factor_angle(f, theta));
  });
  return state;
}

DenseOperator circuit_to_dense(const ParameterizedCircuit& circuit, std::span<const double> theta,
                               const NumericPolicy& policy) {
  check_theta(circuit, theta);
  check_dense_cap(circuit.n_qubits(), policy);
  const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits();
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (const CircuitFactor& f : circuit.factors()) {
    const double a = factor_angle(f, theta) / 2;
    const DenseOperator s = to_dense(f.generator, policy);
    u = u * (std::cos(a) * DenseOperator::Identity(dim, dim) + Complex(0.0, std::sin(a)) * s);
  }
  return u;
}

ParameterizedCircuit prune_by_gradient(const ParameterizedCircuit& circuit,
                                       const std::function<double(std::span<const double>)>& cost,
                                       double threshold) {
  const auto np = static_cast<std::size_t>(circuit.n_parameters());
  constexpr double kStep = 1e-4;
  std::vector<int> renumber(np, -1);
  int kept = 0;
  std::vector<double> theta(np, 0.0);
  for (std::size_t p = 0; p < np; ++p) {
    theta[p] = kStep;
    const double up = cost(theta);
    theta[p] = -kStep;
    const double down = cost(theta);
    theta[p] = 0.0;
    if (std::abs(up - down) / (2 * kStep) >= threshold) renumber[p] = kept++;
  }
  std::vector<CircuitFactor> factors;
  for (const CircuitFactor& f : circuit.factors()) {
    const int r = renumber[static_cast<std::size_t>(f.parameter_index)];
    if (r >= 0) factors.push_back({f.generator, r, f.scale});
  }
  return ParameterizedCircuit(circuit.n_qubits(), std::move(factors), kept);
}

ErrorPattern draw_error_pattern(const ParameterizedCircuit& circuit, double pauli_error_prob, RngStream& rng) {
  ErrorPattern pattern(circuit.factors().size(), 0);
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (circuit.factors()[k].generator.weight() < 2) continue;
    if (rng.uniform() < pauli_error_prob) pattern[k] = static_cast<std::uint8_t>(1 + rng.below(15));
  }
  return pattern;
}

StateVector apply_ansatz_with_errors(StateVector state, const ParameterizedCircuit& circuit,
                                     std::span<const double> theta, bool adjoint,
                                     const ErrorPattern& pattern) {
  check_theta(circuit, theta);
  require(pattern.size() == circuit.factors().size(), ErrorKind::kDimension,
          "error pattern needs one entry per factor");
  require(state.n_qubits() == circuit.n_qubits(), ErrorKind::kDimension,
          "circuit does not match the state size");
  for_each_applied(circuit, adjoint, [&](std::size_t k, double sign) {
    const CircuitFactor& f = circuit.factors()[k];
    state = apply_pauli_rotation(std::move(state), f.generator, sign * factor_angle(f, theta));
    if (pattern[k] != 0) state = apply_pauli_string(std::move(state), error_string(f, pattern[k]));
  });
  return state;
}

double estimate_circuit_expectation(const StateVector& input, const ParameterizedCircuit& circuit,
                                    std::span<const double> theta, bool adjoint, const PauliString& sigma,
                                    const ShotPlan& plan, RngStream& rng) {
  plan.validate();
  if (plan.is_exact() || plan.pauli_error_prob == 0.0) {
    return estimate_expectation(apply_ansatz(input, circuit, theta, adjoint), sigma, plan, rng);
  }
  if (sigma.is_identity()) return 1.0;
  const std::uint64_t shots = *plan.shots;
  RngStream noise(rng.seed(), derive_stream_id({rng.stream_id(), 0x6e6f697365ULL}));
  std::map<ErrorPattern, std::uint64_t> groups;
  for (std::uint64_t s = 0; s < shots; ++s) ++groups[draw_error_pattern(circuit, plan.pauli_error_prob, noise)];
  std::int64_t sum = 0;
  for (const auto& [pattern, count] : groups) {
    const StateVector out = apply_ansatz_with_errors(input, circuit, theta, adjoint, pattern);
    sum += sample_parity_sum(out, sigma, count, plan.readout_flip_prob, rng);
  }
  return static_cast<double>(sum) / static_cast<double>(shots);
}

}  // namespace swt
