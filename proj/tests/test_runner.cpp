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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "swt/errors.hpp"
#include "swt/runner.hpp"

namespace swt {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("swt_runner_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Config, SettingsAndAliases) {
  RunConfig c;
  apply_setting(c, "--n", "6");
  apply_setting(c, "readout-flip", "0.01");
  apply_setting(c, "backend", "shots");
  apply_setting(c, "shots", "1000");
  apply_setting(c, "ancillas", "3,5");
  EXPECT_EQ(c.model.n_spins, 6);
  EXPECT_DOUBLE_EQ(c.readout_flip, 0.01);
  EXPECT_EQ(c.backend, AmplitudeBackend::kGDecompositionShots);
  EXPECT_EQ(c.shots, 1000u);
  EXPECT_EQ(c.ancillas, (std::vector<int>{3, 5}));
  apply_setting(c, "shots", "exact");
  EXPECT_FALSE(c.shots.has_value());
}

TEST(Config, UnknownKeyAndBadValue) {
  RunConfig c;
  try {
    apply_setting(c, "colour", "blue");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
  EXPECT_THROW(apply_setting(c, "seed", "twelve"), Error);
  EXPECT_THROW(apply_setting(c, "branch", "sideways"), Error);
}

TEST(Config, TextFormat) {
  RunConfig c;
  apply_config_text(c, "# comment\nepsilon = 0.5\n\nmax_iter = 12  # trailing\n");
  EXPECT_DOUBLE_EQ(c.model.epsilon, 0.5);
  EXPECT_EQ(c.max_iter, 12);
  EXPECT_THROW(apply_config_text(c, "no equals sign\n"), Error);
}

TEST(Config, EchoReflectsSettings) {
  RunConfig c;
  apply_setting(c, "epsilon", "0.25");
  apply_setting(c, "seed", "99");
  const nlohmann::json echo = config_echo(c);
  EXPECT_DOUBLE_EQ(echo["epsilon"].get<double>(), 0.25);
  EXPECT_EQ(echo["seed"].get<std::uint64_t>(), 99u);
  EXPECT_EQ(echo["shots"], "exact");
  EXPECT_EQ(echo["ancillas"], "4,6,8");
  EXPECT_TRUE(echo.contains("rng"));
}

TEST(Runner, ExactReportWritten) {
  RunConfig c;
  c.out_dir = scratch("exact").string();
  const nlohmann::json report = run_exact(c);
  EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / "report.json"));
  EXPECT_NEAR(report["heff"]["eigenvalues"][0].get<double>(), -8.0, 1e-10);
  EXPECT_EQ(nlohmann::json::parse(slurp(fs::path(c.out_dir) / "report.json")), report);
}

TEST(Runner, VqaTraceAndDeterminism) {
  RunConfig c;
  c.max_iter = 4;
  c.backend = AmplitudeBackend::kGDecompositionShots;
  c.shots = 200;
  c.out_dir = scratch("vqa_a").string();
  run_vqa(c);
  const std::string trace = slurp(fs::path(c.out_dir) / "trace.csv");
  EXPECT_EQ(trace.rfind("step,cost,theta_0,theta_1,theta_2,eig_0", 0), 0u);
  const std::string first = slurp(fs::path(c.out_dir) / "summary.json");
  c.out_dir = scratch("vqa_b").string();
  run_vqa(c);
  EXPECT_EQ(slurp(fs::path(c.out_dir) / "trace.csv"), trace);
  EXPECT_EQ(slurp(fs::path(c.out_dir) / "summary.json"), first);
}

TEST(Runner, CheckPasses) {
  RunConfig c;
  c.out_dir = scratch("check").string();
  const nlohmann::json report = run_check(c);
  EXPECT_TRUE(report["passed"].get<bool>()) << report.dump(2);
}

TEST(Formatting, Double17) {
  EXPECT_EQ(format_double17(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double17(-2.0), "-2");
}

}  // namespace
}  // namespace swt
