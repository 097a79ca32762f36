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

#include "swt/errors.hpp"

namespace swt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kModel: return "model error";
    case ErrorKind::kDimension: return "dimension error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kConfig: return "config error";
    case ErrorKind::kContract: return "contract error";
    case ErrorKind::kDegeneracy: return "degeneracy error";
    case ErrorKind::kBranch: return "branch-ambiguity error";
    case ErrorKind::kBackendUnsupported: return "backend-unsupported error";
    case ErrorKind::kOptimizerAbort: return "optimizer abort";
    case ErrorKind::kResource: return "resource error";
  }
  return "error";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kModel:
    case ErrorKind::kDimension:
    case ErrorKind::kParse:
    case ErrorKind::kConfig:
    case ErrorKind::kBackendUnsupported:
      return 2;
    case ErrorKind::kContract:
    case ErrorKind::kDegeneracy:
    case ErrorKind::kBranch:
    case ErrorKind::kOptimizerAbort:
      return 3;
    case ErrorKind::kResource:
      return 4;
  }
  return 1;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace swt
