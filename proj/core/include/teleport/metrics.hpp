// Copyright 2026 The teleport-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "teleport/state.hpp"

namespace teleport {

/// <target|rho|target>, clamped to [0, 1]. Registers must match exactly.
double fidelity(const DensityMatrix &rho, const StateVector &target);
/// |<lhs|rhs>|^2.
double fidelity(const StateVector &lhs, const StateVector &rhs);
double fidelity(const QuantumState &state, const StateVector &target);

/// Half the trace norm of the difference.
double trace_distance(const DensityMatrix &lhs, const DensityMatrix &rhs);

/// Largest entrywise modulus of the difference; registers must match.
double max_abs_diff(const DensityMatrix &lhs, const DensityMatrix &rhs);

/// Wootters concurrence of a two-qubit state, in [0, 1].
///
/// Computed as the singular values of tau = W^T (Y x Y) W with rho = W W^dag,
/// where W's columns are the eigenvectors scaled by sqrt(eigenvalue).
/// Eigenvalues below 1e-12 are dropped; their square roots would otherwise
/// inject ~1e-8 noise into rank-deficient (e.g. pure) inputs.
double concurrence(const DensityMatrix &rho);
/// 2 |a d - b c| for amplitudes (a, b, c, d).
double concurrence(const StateVector &state);

}  // namespace teleport
