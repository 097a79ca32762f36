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

// swt: command-line front end.
//
//   swt exact --n 4 --epsilon 1 --out runs/exact
//   swt vqa --backend shots --shots 10000 --seed 7 --out runs/vqa
//   swt qpe --ancillas 4,6,8 --out runs/qpe
//   swt check
//
// Exit codes: 0 success, 2 validation, 3 numeric contract, 4 resource cap.

#include <iostream>
#include <map>
#include <new>
#include <string>

#include <CLI11.hpp>

#include "swt/errors.hpp"
#include "swt/runner.hpp"

namespace {

constexpr const char* kFlags[] = {"n",           "epsilon",     "backend",  "shots",    "seed",
                                  "readout-flip", "pauli-error", "ancillas", "out",      "ansatz",
                                  "max-iter",    "patience",    "spsa-a",   "spsa-c",   "monte-carlo-pairs",
                                  "branch",      "nested"};

int run(int argc, char** argv) {
  CLI::App app{"Schrieffer-Wolff effective Hamiltonians: exact, variational and phase-estimation routes"};
  app.set_version_flag("--version", std::string(SWT_VERSION_STRING));
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> flags;
  for (const char* name : {"exact", "vqa", "qpe", "check"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "flat key = value file; flags override it");
    for (const char* flag : kFlags) sub->add_option(std::string("--") + flag, flags[flag]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  swt::RunConfig config;
  if (!config_path.empty()) swt::apply_config_file(config, config_path);
  for (const char* flag : kFlags) {
    const std::string& value = flags[flag];
    if (!value.empty()) swt::apply_setting(config, flag, value);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "exact") {
    const auto report = swt::run_exact(config);
    std::cout << "eigenvalues " << report["heff"]["eigenvalues"].dump() << "\n";
  } else if (command == "vqa") {
    const auto summary = swt::run_vqa(config);
    std::cout << "final cost " << summary["final_cost"].dump() << ", eigenvalues "
              << summary["heff"]["eigenvalues"].dump() << "\n";
  } else if (command == "qpe") {
    const auto report = swt::run_qpe(config);
    for (const auto& r : report["records"]) {
      std::cout << "l = " << r["l"].dump() << " fidelities " << r["fidelities"].dump() << "\n";
    }
  } else {
    const auto report = swt::run_check(config);
    for (const auto& c : report["checks"]) {
      std::cout << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>() << "\n";
    }
    return report["passed"].get<bool>() ? 0 : 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const swt::Error& e) {
    std::cerr << "swt: " << e.what() << "\n";
    return swt::exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "swt: out of memory\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "swt: " << e.what() << "\n";
    return 3;
  }
}
