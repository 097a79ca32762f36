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

#include "swt/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swt/ansatz.hpp"
#include "swt/dense_reference.hpp"
#include "swt/errors.hpp"

namespace swt {
namespace {

using nlohmann::json;

std::string normalize_key(std::string_view key) {
  std::string k(key);
  while (!k.empty() && k.front() == '-') k.erase(k.begin());
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  require(r.ec == std::errc{} && r.ptr == text.data() + text.size(), ErrorKind::kConfig,
          "bad value '" + std::string(text) + "' for " + std::string(key));
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  fail(ErrorKind::kConfig, "bad boolean '" + std::string(text) + "' for " + std::string(key));
}

json provenance(const RunConfig& config, std::string_view command) {
  return {{"tool", "swt"},
          {"version", SWT_VERSION_STRING},
          {"command", command},
          {"config", config_echo(config)}};
}

void write_text(const RunConfig& config, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path path = std::filesystem::path(config.out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::kConfig, "cannot write " + path.string());
  out << text;
}

void write_json(const RunConfig& config, const std::string& name, const json& j) {
  write_text(config, name, j.dump(2) + "\n");
}

json vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v[k]);
  return out;
}

json real_matrix_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

ParameterizedCircuit build_circuit(const RunConfig& config) {
  if (config.ansatz == "preset") {
    require(config.model.n_spins == 4, ErrorKind::kConfig, "the preset ansatz is defined for 4 spins only");
    return preset_n4_ansatz();
  }
  return ansatz_from_commutator(heisenberg_h0(config.model.n_spins), heisenberg_v(config.model.n_spins));
}

std::string trace_csv(const OptimizationTrace& trace, int n_parameters) {
  std::string out = "step,cost";
  for (int p = 0; p < n_parameters; ++p) out += ",theta_" + std::to_string(p);
  std::size_t n_eigs = 0;
  if (!trace.iterations.empty() && trace.iterations.front().spectrum) n_eigs = trace.iterations.front().spectrum->size();
  for (std::size_t k = 0; k < n_eigs; ++k) out += ",eig_" + std::to_string(k);
  out += '\n';
  for (const TraceEntry& e : trace.iterations) {
    out += std::to_string(e.step) + ',' + format_double17(e.cost);
    for (double t : e.theta) out += ',' + format_double17(t);
    if (e.spectrum) {
      for (double v : *e.spectrum) out += ',' + format_double17(v);
    }
    out += '\n';
  }
  return out;
}

double threshold_energy(const ExactSolution& sol) {
  // Halfway across the unperturbed gap above the low-energy window.
  const SpectralDecomposition s0 = eigh(to_dense(sol.h0));
  return s0.eigenvalues[sol.basis.size()] - sol.gap.gap / 2;
}

}  // namespace

std::string format_double17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

ShotPlan RunConfig::shot_plan() const { return {shots, seed, readout_flip, pauli_error}; }

CostConfig RunConfig::cost_config() const { return {backend, shot_plan(), monte_carlo_pairs}; }

SpsaOptions RunConfig::spsa_options() const {
  SpsaOptions o;
  o.a = spsa_a;
  o.c = spsa_c;
  o.max_iter = max_iter;
  o.patience = patience;
  o.seed = seed;
  return o;
}

void RunConfig::validate() const {
  model.validate();
  shot_plan().validate();
  spsa_options().validate();
  require(ansatz == "preset" || ansatz == "commutator", ErrorKind::kConfig, "ansatz must be preset or commutator");
  require(!ancillas.empty(), ErrorKind::kConfig, "at least one ancilla count required");
  for (int l : ancillas) require(l >= 1 && l <= 30, ErrorKind::kConfig, "ancilla counts must lie in [1, 30]");
  if (monte_carlo_pairs) require(*monte_carlo_pairs >= 1, ErrorKind::kConfig, "monte_carlo_pairs must be positive");
  require(!out_dir.empty(), ErrorKind::kConfig, "output directory must not be empty");
}

void apply_setting(RunConfig& c, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string value = trim(raw_value);
  if (key == "n" || key == "n_spins") {
    c.model.n_spins = parse_number<int>(key, value);
  } else if (key == "epsilon") {
    c.model.epsilon = parse_number<double>(key, value);
  } else if (key == "backend") {
    c.backend = parse_backend(value);
  } else if (key == "shots") {
    if (value == "exact" || value == "none") {
      c.shots.reset();
    } else {
      c.shots = parse_number<std::uint64_t>(key, value);
    }
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "readout_flip") {
    c.readout_flip = parse_number<double>(key, value);
  } else if (key == "pauli_error") {
    c.pauli_error = parse_number<double>(key, value);
  } else if (key == "monte_carlo_pairs") {
    c.monte_carlo_pairs = parse_number<int>(key, value);
  } else if (key == "ansatz") {
    c.ansatz = value;
  } else if (key == "max_iter") {
    c.max_iter = parse_number<int>(key, value);
  } else if (key == "patience") {
    c.patience = parse_number<int>(key, value);
  } else if (key == "spsa_a") {
    c.spsa_a = parse_number<double>(key, value);
  } else if (key == "spsa_c") {
    c.spsa_c = parse_number<double>(key, value);
  } else if (key == "ancillas") {
    c.ancillas.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) c.ancillas.push_back(parse_number<int>(key, trim(item)));
  } else if (key == "branch") {
    if (value == "principal") {
      c.branch = PhaseBranch::kPrincipal;
    } else if (value == "literal") {
      c.branch = PhaseBranch::kLiteral;
    } else {
      fail(ErrorKind::kConfig, "branch must be principal or literal");
    }
  } else if (key == "nested") {
    c.nested = parse_bool(key, value);
  } else if (key == "out") {
    c.out_dir = value;
  } else {
    fail(ErrorKind::kConfig, "unknown setting '" + std::string(raw_key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorKind::kConfig,
            "config line " + std::to_string(line_no) + ": expected key = value");
    apply_setting(config, trim(std::string_view(line).substr(0, eq)), std::string_view(line).substr(eq + 1));
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::kConfig, "cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(config, buffer.str());
}

json config_echo(const RunConfig& c) {
  std::string ancillas;
  for (int l : c.ancillas) ancillas += (ancillas.empty() ? "" : ",") + std::to_string(l);
  return {{"n", c.model.n_spins},
          {"epsilon", c.model.epsilon},
          {"backend", to_string(c.backend)},
          {"shots", c.shots ? json(*c.shots) : json("exact")},
          {"seed", c.seed},
          {"readout_flip", c.readout_flip},
          {"pauli_error", c.pauli_error},
          {"monte_carlo_pairs", c.monte_carlo_pairs ? json(*c.monte_carlo_pairs) : json(nullptr)},
          {"ansatz", c.ansatz},
          {"max_iter", c.max_iter},
          {"patience", c.patience},
          {"spsa_a", c.spsa_a ? json(*c.spsa_a) : json("calibrated")},
          {"spsa_c", c.spsa_c},
          {"ancillas", ancillas},
          {"branch", c.branch == PhaseBranch::kPrincipal ? "principal" : "literal"},
          {"nested", c.nested},
          {"rng", "philox4x64-10"}};
}

json matrix_to_json(const DenseOperator& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    out.push_back(row);
  }
  return out;
}

json state_to_json(const StateVector& s) {
  json amps = json::array();
  for (Eigen::Index k = 0; k < s.dimension(); ++k) amps.push_back({s.amplitudes()[k].real(), s.amplitudes()[k].imag()});
  return {{"n_qubits", s.n_qubits()}, {"normalized", !s.is_unnormalized()}, {"amplitudes", amps}};
}

json basis_to_json(const SubspaceBasis& basis) {
  json states = json::array();
  for (int i = 0; i < basis.size(); ++i) {
    json s = state_to_json(basis.state(i));
    s["label"] = basis.labels()[static_cast<std::size_t>(i)];
    states.push_back(s);
  }
  json relations = json::array();
  for (const GRelation& r : basis.relations()) relations.push_back({{"from", r.from}, {"to", r.to}, {"g", r.g.letters()}});
  return {{"n_qubits", basis.n_qubits()}, {"states", states}, {"g_relations", relations}};
}

json heff_to_json(const EffectiveHamiltonian& heff) {
  json out = {{"basis_labels", heff.basis_labels},
              {"matrix", matrix_to_json(heff.matrix)},
              {"eigenvalues", vector_to_json(heff.eigenvalues)},
              {"hermiticity_deviation", heff.hermiticity_deviation}};
  if (heff.fidelities) out["fidelities"] = *heff.fidelities;
  return out;
}

json run_exact(const RunConfig& config) {
  config.validate();
  const ExactSolution sol = solve_exact(config.model);
  const int m = sol.basis.size();
  const RealVector lowest = sol.spectrum.eigenvalues.head(m);
  const double eig_error = (sol.heff.eigenvalues - lowest).cwiseAbs().maxCoeff();
  const double mapping_error = max_abs(sol.u * sol.p * sol.u.adjoint() - sol.p0);
  const double unitarity_error = max_abs(sol.u.adjoint() * sol.u - DenseOperator::Identity(sol.u.rows(), sol.u.cols()));
  json report = {{"provenance", provenance(config, "exact")},
                 {"gap_check",
                  {{"gap", sol.gap.gap},
                   {"v_norm", sol.gap.v_norm},
                   {"condition_met", sol.gap.condition_met},
                   {"advisory", true}}},
                 {"heff", heff_to_json(sol.heff)},
                 {"oracle",
                  {{"lowest_eigenvalues", vector_to_json(lowest)},
                   {"max_eigenvalue_error", eig_error},
                   {"projector_mapping_error", mapping_error},
                   {"unitarity_error", unitarity_error}}},
                 {"basis", basis_to_json(sol.basis)}};
  write_json(config, "report.json", report);
  return report;
}

json run_vqa(const RunConfig& config) {
  config.validate();
  const ExactSolution sol = solve_exact(config.model);
  const ParameterizedCircuit circuit = build_circuit(config);
  const CostConfig cost_config = config.cost_config();
  const CostEvaluator evaluator(sol.basis, sol.h, cost_config);

  std::uint64_t evaluation = 0;
  std::uint64_t snapshot_evaluation = std::uint64_t{1} << 40;
  const CostFunction cost = [&](std::span<const double> theta) {
    return evaluator.cost(SwtTransform(circuit, {theta.begin(), theta.end()}), evaluation++);
  };
  const SnapshotFunction snapshot = [&](std::span<const double> theta) {
    const HeffEstimate e = reconstruct_heff(sol.basis, sol.h, SwtTransform(circuit, {theta.begin(), theta.end()}),
                                            cost_config, nullptr, snapshot_evaluation++);
    return std::vector<double>(e.heff.eigenvalues.data(), e.heff.eigenvalues.data() + e.heff.eigenvalues.size());
  };

  OptimizationTrace trace;
  try {
    trace = spsa_minimize(cost, std::vector<double>(static_cast<std::size_t>(circuit.n_parameters()), 0.0),
                          config.spsa_options(), snapshot);
  } catch (const OptimizerAbort& abort) {
    write_text(config, "trace.csv", trace_csv(abort.trace(), circuit.n_parameters()));
    throw;
  }
  write_text(config, "trace.csv", trace_csv(trace, circuit.n_parameters()));

  const SwtTransform final_transform(circuit, trace.final_theta);
  const HeffEstimate final_heff =
      reconstruct_heff(sol.basis, sol.h, final_transform, cost_config, &sol.heff, std::uint64_t{1} << 41);
  const HeffEstimate noiseless = reconstruct_heff(sol.basis, sol.h, final_transform, CostConfig{}, &sol.heff);
  const double range = sol.spectrum.eigenvalues[sol.spectrum.size() - 1] - sol.spectrum.eigenvalues[0];

  json summary = {{"provenance", provenance(config, "vqa")},
                  {"circuit", circuit.to_text()},
                  {"seed", trace.seed},
                  {"backend", to_string(config.backend)},
                  {"shot_plan",
                   {{"shots", config.shots ? json(*config.shots) : json("exact")},
                    {"rng_seed", config.seed},
                    {"readout_flip_prob", config.readout_flip},
                    {"pauli_error_prob", config.pauli_error}}},
                  {"optimizer",
                   {{"iterations", trace.iterations.size() - 1},
                    {"evaluations", trace.evaluations},
                    {"converged", trace.converged},
                    {"a", trace.a},
                    {"A", trace.big_a},
                    {"c", config.spsa_c}}},
                  {"final_theta", trace.final_theta},
                  {"final_cost", trace.final_cost},
                  {"heff", heff_to_json(final_heff.heff)},
                  {"heff_standard_errors", real_matrix_to_json(final_heff.standard_errors)},
                  {"noiseless_heff", heff_to_json(noiseless.heff)},
                  {"exact_eigenvalues", vector_to_json(sol.heff.eigenvalues)},
                  {"spectral_range", range}};
  write_json(config, "summary.json", summary);
  return summary;
}

json run_qpe(const RunConfig& config) {
  config.validate();
  const ExactSolution sol = solve_exact(config.model);
  const int n = config.model.n_spins;
  for (int l : config.ancillas) {
    require(l + n <= default_policy().max_state_qubits, ErrorKind::kResource,
            "joint register of " + std::to_string(l + n) + " qubits exceeds the state cap");
  }
  const double threshold = threshold_energy(sol);
  const DenseOperator h0_dense = to_dense(sol.h0);
  const DenseOperator exact_w = reflection(sol.p0) * reflection(sol.p);

  std::vector<int> ls = config.ancillas;
  std::sort(ls.begin(), ls.end());
  json records = json::array();
  std::vector<std::vector<double>> fidelity_by_state(static_cast<std::size_t>(sol.basis.size()));
  for (int l : ls) {
    const QpeConfig qc = schedule_time(sol.h_dense, l, threshold);
    DenseOperator w = exact_w;
    if (config.nested) {
      const QpeConfig qc0 = schedule_time(h0_dense, l, threshold);
      w = qpe_reflection_operator(h0_dense, qc0) * qpe_reflection_operator(sol.h_dense, qc);
    }
    json fidelities = json::array();
    json leakage = json::array();
    json warnings = json::array();
    for (int b = 0; b < sol.basis.size(); ++b) {
      const StateVector& phi = sol.basis.state(b);
      const QpeOutput out = swt_via_qpe(phi, w, l, config.branch);
      const ComplexVector target = sol.u * phi.amplitudes();
      const double f = std::norm(target.dot(out.data.amplitudes()));
      fidelity_by_state[static_cast<std::size_t>(b)].push_back(f);
      fidelities.push_back(f);
      leakage.push_back(out.ancilla_leakage);
      for (const std::string& w_text : out.warnings) warnings.push_back(w_text);
    }
    // Reflection on exact eigenvectors: signed overlap with the expected image.
    double min_below = 1.0, min_above = 1.0;
    for (Eigen::Index k = 0; k < sol.spectrum.size(); ++k) {
      const ComplexVector v = sol.spectrum.eigenvectors.col(k);
      const double sign = sol.spectrum.eigenvalues[k] < threshold ? 1.0 : -1.0;
      const QpeOutput out = reflection_via_qpe(StateVector::from_amplitudes(v), sol.h_dense, qc);
      const double overlap = sign * v.dot(out.data.amplitudes()).real();
      (sign > 0 ? min_below : min_above) = std::min(sign > 0 ? min_below : min_above, overlap);
      for (const std::string& w_text : out.warnings) warnings.push_back(w_text);
    }
    records.push_back({{"l", l},
                       {"t", qc.time_scale},
                       {"shift", qc.energy_shift},
                       {"k_threshold", qc.k_threshold},
                       {"fidelities", fidelities},
                       {"ancilla_leakage", leakage},
                       {"reflection", {{"min_signed_overlap_below", min_below}, {"min_signed_overlap_above", min_above}}},
                       {"warnings", warnings}});
  }
  json monotone_per_state = json::array();
  bool monotone = true;
  for (const auto& f : fidelity_by_state) {
    bool ok = std::is_sorted(f.begin(), f.end());
    monotone_per_state.push_back(ok);
    monotone = monotone && ok;
  }
  json report = {{"provenance", provenance(config, "qpe")},
                 {"threshold_energy", threshold},
                 {"records", records},
                 {"monotone", monotone},
                 {"monotone_per_state", monotone_per_state}};
  write_json(config, "qpe_report.json", report);
  return report;
}

json run_check(const RunConfig& config) {
  config.validate();
  json checks = json::array();
  bool all = true;
  const auto check = [&](const std::string& name, double value, double tolerance) {
    const bool ok = std::isfinite(value) && value <= tolerance;
    all = all && ok;
    checks.push_back({{"name", name}, {"value", value}, {"tolerance", tolerance}, {"passed", ok}});
  };

  const ExactSolution sol = solve_exact(config.model);
  const int m = sol.basis.size();
  const DenseOperator eye = DenseOperator::Identity(sol.u.rows(), sol.u.cols());
  check("h0_hermitian", hermiticity_defect(to_dense(sol.h0)), 1e-12);
  check("commutator_antisymmetry",
        (hermitian_commutator(sol.h0, sol.v) + hermitian_commutator(sol.v, sol.h0)).size(), 0.0);
  double residual = 0.0;
  const DenseOperator h0_dense = to_dense(sol.h0);
  const double e0 = eigh(h0_dense).eigenvalues[0];
  for (const StateVector& s : sol.basis.states()) {
    residual = std::max(residual, (h0_dense * s.amplitudes() - e0 * s.amplitudes()).norm());
  }
  check("ground_basis_residual", residual, 1e-9);
  check("reflection_involution", max_abs(reflection(sol.p) * reflection(sol.p) - eye), 1e-10);
  check("rotation_unitarity", max_abs(sol.u.adjoint() * sol.u - eye), 1e-9);
  check("rotation_maps_p_to_p0", max_abs(sol.u * sol.p * sol.u.adjoint() - sol.p0), 1e-8);
  check("rotation_square", max_abs(sol.u * sol.u - reflection(sol.p0) * reflection(sol.p)), 1e-8);
  check("heff_eigenvalues", (sol.heff.eigenvalues - sol.spectrum.eigenvalues.head(m)).cwiseAbs().maxCoeff(), 1e-8);

  const ParameterizedCircuit circuit = build_circuit(config);
  RngStream rng(config.seed, derive_stream_id({0x636865636bULL}));
  std::vector<double> theta(static_cast<std::size_t>(circuit.n_parameters()));
  for (double& t : theta) t = 2.0 * rng.uniform() - 1.0;
  const SwtTransform transform(circuit, theta);
  const CostEvaluator exact_eval(sol.basis, sol.h, CostConfig{});
  const DenseOperator u_dense = transform.dense();
  const DenseOperator p_theta = u_dense.adjoint() * sol.p0 * u_dense;
  check("trace_identity", std::abs(exact_eval.signed_cost(transform) - trace_c(sol.h_dense, p_theta, m)), 1e-10);
  CostConfig g_config;
  g_config.backend = AmplitudeBackend::kGDecompositionShots;
  const CostEvaluator g_eval(sol.basis, sol.h, g_config);
  const DenseOperator a = exact_eval.amplitude_matrix(transform).values;
  const DenseOperator b = g_eval.amplitude_matrix(transform).values;
  check("backend_equivalence", max_abs(a - b), 1e-12);
  check("evolution_cost_at_zero_time", std::abs(cost_evolution(sol.basis, sol.h, transform, 0.0) + 1.0), 1e-12);

  const int l = 4;
  if (l + config.model.n_spins <= default_policy().max_state_qubits) {
    const StateVector& phi = sol.basis.state(0);
    const QpeOutput out = swt_via_qpe(phi, eye, l);
    check("qpe_identity_product", (out.data.amplitudes() - phi.amplitudes()).norm(), 1e-10);
  }

  json report = {{"provenance", provenance(config, "check")}, {"checks", checks}, {"passed", all}};
  write_json(config, "check_report.json", report);
  return report;
}

}  // namespace swt
