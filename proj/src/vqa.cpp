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

#include "swt/vqa.hpp"

#include <cmath>

#include "swt/errors.hpp"

namespace swt {
namespace {

constexpr std::uint64_t kTagDiagonalH2 = 0x68327371;
constexpr std::uint64_t kTagAmplitude = 0x616d706c;
constexpr std::uint64_t kTagPairs = 0x70616972;

bool sampled(const CostConfig& c) {
  return c.backend == AmplitudeBackend::kGDecompositionShots && !c.shot_plan.is_exact();
}

double shot_variance(double mean, const ShotPlan& plan) {
  if (plan.is_exact()) return 0.0;
  return std::max(0.0, 1.0 - mean * mean) / static_cast<double>(*plan.shots);
}

RngStream stream(const CostConfig& c, std::initializer_list<std::uint64_t> parts) {
  return RngStream(c.shot_plan.rng_seed, derive_stream_id(parts));
}

std::vector<StateVector> transformed_basis(const SubspaceBasis& basis, const SwtTransform& t) {
  std::vector<StateVector> psi;
  psi.reserve(static_cast<std::size_t>(basis.size()));
  for (const StateVector& phi : basis.states()) psi.push_back(t.apply_adjoint(phi));
  return psi;
}

// Real part of <phi_i|U sigma U^dagger|phi_j> from the two superposition
// expectations, and its variance.
std::pair<double, double> g_decomposed(const SubspaceBasis& basis, int i, int j, const PauliString& sigma,
                                       const SwtTransform& transform, const CostConfig& config,
                                       std::initializer_list<std::uint64_t> stream_parts) {
  const ShotPlan& plan = config.shot_plan;
  if (i == j) {
    RngStream rng = stream(config, stream_parts);
    const double e = transform.adjoint_expectation(basis.state(i), sigma, plan, rng);
    return {e, shot_variance(e, plan)};
  }
  const std::optional<PauliString> g = basis.relation(i, j);
  require(g.has_value(), ErrorKind::kBackendUnsupported,
          "no G relation links basis states " + basis.labels()[static_cast<std::size_t>(i)] + " and " +
              basis.labels()[static_cast<std::size_t>(j)]);
  double e[2];
  double var = 0.0;
  for (int branch = 0; branch < 2; ++branch) {
    const int sign = branch == 0 ? 1 : -1;
    const PreparedState s = prepare_state(GSuperpositionSpec{std::cref(basis), i, *g, sign});
    RngStream rng = stream(config, {derive_stream_id(stream_parts), static_cast<std::uint64_t>(branch)});
    e[branch] = transform.adjoint_expectation(s.state, sigma, plan, rng);
    var += shot_variance(e[branch], plan);
  }
  return {(e[0] - e[1]) / 2, var / 4};
}

}  // namespace

std::string_view to_string(AmplitudeBackend backend) {
  return backend == AmplitudeBackend::kExactAmplitudes ? "exact_amplitudes" : "g_decomposition_shots";
}

AmplitudeBackend parse_backend(std::string_view text) {
  if (text == "exact_amplitudes" || text == "exact") return AmplitudeBackend::kExactAmplitudes;
  if (text == "g_decomposition_shots" || text == "shots" || text == "g_decomposition")
    return AmplitudeBackend::kGDecompositionShots;
  fail(ErrorKind::kConfig, "unknown backend '" + std::string(text) + "'");
}

void CostConfig::validate(int m_size) const {
  shot_plan.validate();
  if (monte_carlo_pairs) {
    require(*monte_carlo_pairs >= 1 && *monte_carlo_pairs <= m_size * m_size, ErrorKind::kConfig,
            "monte_carlo_pairs must lie in [1, M^2]");
  }
}

SwtTransform::SwtTransform(ParameterizedCircuit circuit, std::vector<double> theta)
    : circuit_(std::move(circuit)), theta_(std::move(theta)) {
  require(theta_.size() == static_cast<std::size_t>(circuit_.n_parameters()), ErrorKind::kDimension,
          "parameter vector does not match the circuit");
}

SwtTransform::SwtTransform(DenseOperator u)
    : circuit_(qubit_count_of_dimension(u.rows())), dense_(std::move(u)) {
  require(dense_->rows() == dense_->cols(), ErrorKind::kDimension, "transformation must be square");
  require(is_unitary(*dense_, 1e-9), ErrorKind::kContract, "injected transformation is not unitary");
}

int SwtTransform::n_qubits() const { return circuit_.n_qubits(); }

StateVector SwtTransform::apply_adjoint(const StateVector& phi) const {
  if (dense_) {
    require(phi.dimension() == dense_->rows(), ErrorKind::kDimension,
            "state does not match the transformation");
    return StateVector::unnormalized(dense_->adjoint() * phi.amplitudes()).normalized();
  }
  return apply_ansatz(phi, circuit_, theta_, true);
}

double SwtTransform::adjoint_expectation(const StateVector& phi, const PauliString& sigma, const ShotPlan& plan,
                                         RngStream& rng) const {
  if (dense_) return estimate_expectation(apply_adjoint(phi), sigma, plan, rng);
  return estimate_circuit_expectation(phi, circuit_, theta_, true, sigma, plan, rng);
}

DenseOperator SwtTransform::dense(const NumericPolicy& policy) const {
  if (dense_) return *dense_;
  return circuit_to_dense(circuit_, theta_, policy);
}

Complex transition_amplitude(const SubspaceBasis& basis, int i, int j, const PauliString& observable,
                             const SwtTransform& transform, const CostConfig& config, std::uint64_t evaluation) {
  require(observable.n_qubits() == basis.n_qubits(), ErrorKind::kDimension,
          "observable does not match the basis");
  if (config.backend == AmplitudeBackend::kExactAmplitudes) {
    const StateVector a = transform.apply_adjoint(basis.state(i));
    const StateVector b = transform.apply_adjoint(basis.state(j));
    return pauli_matrix_element(a.amplitudes(), observable, b.amplitudes());
  }
  config.shot_plan.validate();
  const auto key = {evaluation, kTagAmplitude, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j),
                    observable.x_mask(), observable.z_mask()};
  return g_decomposed(basis, i, j, observable, transform, config, key).first;
}

CostEvaluator::CostEvaluator(const SubspaceBasis& basis, PauliSum h, CostConfig config,
                             const NumericPolicy& policy)
    : basis_(basis),
      h_(std::move(h)),
      h2_(real_part(pauli_sum_product(h_, h_))),
      config_(std::move(config)),
      policy_(policy) {
  require(h_.n_qubits() == basis.n_qubits(), ErrorKind::kDimension, "Hamiltonian does not match the basis");
  config_.validate(basis.size());
}

double CostEvaluator::diagonal_h2(const std::vector<StateVector>& psi, const SwtTransform& transform,
                                  std::uint64_t evaluation) const {
  double total = 0.0;
  for (int i = 0; i < basis_.size(); ++i) {
    if (config_.backend == AmplitudeBackend::kExactAmplitudes) {
      const ComplexVector& v = psi[static_cast<std::size_t>(i)].amplitudes();
      for (const PauliTerm& t : h2_.terms()) total += t.coefficient * pauli_matrix_element(v, t.string, v).real();
      continue;
    }
    for (std::size_t k = 0; k < h2_.size(); ++k) {
      const PauliTerm& t = h2_.terms()[k];
      RngStream rng = stream(config_, {evaluation, kTagDiagonalH2, static_cast<std::uint64_t>(i), k});
      total += t.coefficient * transform.adjoint_expectation(basis_.state(i), t.string, config_.shot_plan, rng);
    }
  }
  return total;
}

std::pair<Complex, double> CostEvaluator::entry(int i, int j, const std::vector<StateVector>& psi,
                                                const SwtTransform& transform, std::uint64_t evaluation) const {
  if (config_.backend == AmplitudeBackend::kExactAmplitudes) {
    const ComplexVector hj = apply_pauli_sum(h_, psi[static_cast<std::size_t>(j)].amplitudes());
    return {psi[static_cast<std::size_t>(i)].amplitudes().dot(hj), 0.0};
  }
  double value = 0.0;
  double var = 0.0;
  for (std::size_t k = 0; k < h_.size(); ++k) {
    const PauliTerm& t = h_.terms()[k];
    const auto [e, v] = g_decomposed(basis_, i, j, t.string, transform, config_,
                                     {evaluation, kTagAmplitude, static_cast<std::uint64_t>(i),
                                      static_cast<std::uint64_t>(j), k});
    value += t.coefficient * e;
    var += t.coefficient * t.coefficient * v;
  }
  return {value, var};
}

AmplitudeMatrix CostEvaluator::amplitude_matrix(const SwtTransform& transform, std::uint64_t evaluation) const {
  const int m = basis_.size();
  std::vector<StateVector> psi;
  if (config_.backend == AmplitudeBackend::kExactAmplitudes) psi = transformed_basis(basis_, transform);
  AmplitudeMatrix out{DenseOperator(m, m), Eigen::MatrixXd::Zero(m, m)};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto [value, var] = entry(i, j, psi, transform, evaluation);
      out.values(i, j) = value;
      out.standard_errors(i, j) = std::sqrt(var);
    }
  }
  return out;
}

double CostEvaluator::signed_cost(const SwtTransform& transform, std::uint64_t evaluation) const {
  const int m = basis_.size();
  std::vector<StateVector> psi;
  if (config_.backend == AmplitudeBackend::kExactAmplitudes) psi = transformed_basis(basis_, transform);
  const double diag = diagonal_h2(psi, transform, evaluation);

  double off = 0.0;
  if (config_.monte_carlo_pairs) {
    RngStream rng = stream(config_, {evaluation, kTagPairs});
    const int draws = *config_.monte_carlo_pairs;
    const auto mm = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m);
    double sum = 0.0;
    for (int d = 0; d < draws; ++d) {
      const std::uint64_t pair = rng.below(mm);
      const int i = static_cast<int>(pair / static_cast<std::uint64_t>(m));
      const int j = static_cast<int>(pair % static_cast<std::uint64_t>(m));
      sum += std::norm(entry(i, j, psi, transform, evaluation).first);
    }
    off = sum * static_cast<double>(mm) / draws;
  } else {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) off += std::norm(entry(i, j, psi, transform, evaluation).first);
    }
  }
  return (diag - off) / m;
}

double CostEvaluator::cost(const SwtTransform& transform, std::uint64_t evaluation) const {
  return std::abs(signed_cost(transform, evaluation));
}

double cost_c(const SubspaceBasis& basis, const PauliSum& h, const ParameterizedCircuit& circuit,
              std::span<const double> theta, const CostConfig& config) {
  const CostEvaluator evaluator(basis, h, config);
  return evaluator.cost(SwtTransform(circuit, std::vector<double>(theta.begin(), theta.end())));
}

double cost_evolution(const SubspaceBasis& basis, const PauliSum& h, const SwtTransform& transform, double t,
                      const NumericPolicy& policy) {
  require(h.n_qubits() == basis.n_qubits(), ErrorKind::kDimension, "Hamiltonian does not match the basis");
  const DenseOperator e = evolution_operator(to_dense(h, policy), t, policy);
  const std::vector<StateVector> psi = transformed_basis(basis, transform);
  double sum = 0.0;
  for (const StateVector& a : psi) {
    for (const StateVector& b : psi) sum += std::norm(a.amplitudes().dot(e * b.amplitudes()));
  }
  return -sum / basis.size();
}

double cost_evolution(const SubspaceBasis& basis, const PauliSum& h, const ParameterizedCircuit& circuit,
                      std::span<const double> theta, double t) {
  return cost_evolution(basis, h, SwtTransform(circuit, std::vector<double>(theta.begin(), theta.end())), t);
}

HeffEstimate reconstruct_heff(const SubspaceBasis& basis, const PauliSum& h, const SwtTransform& transform,
                              const CostConfig& config, const EffectiveHamiltonian* reference,
                              std::uint64_t evaluation, const NumericPolicy& policy) {
  const CostEvaluator evaluator(basis, h, config, policy);
  const AmplitudeMatrix raw = evaluator.amplitude_matrix(transform, evaluation);
  const bool hermitize = sampled(config);
  HeffEstimate out{make_effective_hamiltonian(raw.values, basis.labels(), hermitize, policy),
                   raw.standard_errors};
  if (hermitize) {
    // Entries (i, j) and (j, i) come from independent samples.
    const Eigen::MatrixXd var = raw.standard_errors.array().square().matrix();
    out.standard_errors = ((var + var.transpose()).array().sqrt() / 2).matrix();
    for (Eigen::Index i = 0; i < var.rows(); ++i) out.standard_errors(i, i) = raw.standard_errors(i, i);
  }
  if (reference != nullptr) out.heff = with_fidelities(std::move(out.heff), *reference, policy);
  return out;
}

}  // namespace swt
