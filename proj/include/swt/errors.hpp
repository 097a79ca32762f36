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

#include <stdexcept>
#include <string>
#include <string_view>

namespace swt {

/// Category of a toolkit failure. Each category maps onto one CLI exit code.
enum class ErrorKind {
  kModel,               ///< invalid physical model (e.g. fewer than 4 spins)
  kDimension,           ///< qubit-count or matrix-size mismatch
  kParse,               ///< malformed text input
  kConfig,              ///< invalid run configuration value
  kContract,            ///< numeric precondition violated (non-Hermitian, ...)
  kDegeneracy,          ///< degenerate ground state / ambiguous window
  kBranch,              ///< square-root branch ambiguity
  kBackendUnsupported,  ///< backend cannot evaluate the request
  kOptimizerAbort,      ///< non-finite cost during optimization
  kResource,            ///< allocation cap exceeded
};

std::string_view to_string(ErrorKind kind);

/// CLI exit code for an error kind: 2 validation, 3 numeric contract,
/// 4 resource cap.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace swt
