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

namespace swt {

/// Every tolerance and size cap used by the toolkit. Defaults are the
/// contract values; a run config may override individual fields.
struct NumericPolicy {
  /// Pauli-sum coefficients with magnitude below this are dropped after merging.
  double drop_tolerance = 1e-12;
  /// max |A - A^dagger| accepted as Hermitian.
  double hermitian_tolerance = 1e-10;
  /// max |<v_i|v_j> - delta_ij| accepted as orthonormal.
  double orthonormal_tolerance = 1e-10;
  /// Eigenvalues closer than this form one degenerate cluster.
  double cluster_tolerance = 1e-9;
  /// Minimum middle-chain gap for a non-degenerate ground state.
  double ground_gap_tolerance = 1e-8;
  /// Minimum boundary gap for an energy window.
  double window_boundary_tolerance = 1e-10;
  /// Eigenphases of R_P0 R_P closer than this to pi are branch-ambiguous.
  double branch_guard = 1e-6;
  /// Largest n for which 2^n x 2^n dense operators are materialized.
  int max_dense_qubits = 12;
  /// Largest register (data + ancilla) a state vector may span.
  int max_state_qubits = 20;
};

inline const NumericPolicy& default_policy() {
  static const NumericPolicy policy{};
  return policy;
}

}  // namespace swt
