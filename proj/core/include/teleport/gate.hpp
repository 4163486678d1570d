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

#include <span>
#include <string>
#include <vector>

#include "teleport/common.hpp"
#include "teleport/state.hpp"

namespace teleport {

/// Unitary acting on one or two qubits.
class Gate {
  public:
    /// Throws DomainError unless `matrix` is 2x2 or 4x4 and unitary to 1e-12.
    Gate(std::string name, Matrix matrix);

    const std::string &name() const noexcept {
        return name_;
    }
    const Matrix &matrix() const noexcept {
        return m_;
    }
    std::size_t arity() const noexcept {
        return m_.rows() == 2 ? 1 : 2;
    }

    Gate adjoint() const;
    /// `this` applied after `first`.
    Gate after(const Gate &first) const;

    bool operator==(const Gate &other) const {
        return name_ == other.name_ && m_ == other.m_;
    }

  private:
    std::string name_;
    Matrix m_;
};

namespace gates {
Gate identity();
Gate pauli_x();
Gate pauli_y();
Gate pauli_z();
Gate hadamard();
/// Control is the first target, flipped qubit the second.
Gate cnot();
}  // namespace gates

/// Full-register operator for `gate` acting on `targets` (identity elsewhere).
Matrix embed(const Gate &gate, const Register &reg, std::span<const std::string> targets);

StateVector apply_gate(const StateVector &state, const Gate &gate, std::span<const std::string> targets);
StateVector apply_gate(const StateVector &state, const Gate &gate, std::initializer_list<std::string> targets);
DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate, std::span<const std::string> targets);
DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate, std::initializer_list<std::string> targets);
QuantumState apply_gate(const QuantumState &state, const Gate &gate, std::span<const std::string> targets);

/// Applies `sequence` in order (front first).
StateVector apply_sequence(const StateVector &state, std::span<const Gate> sequence, const std::string &target);
QuantumState apply_sequence(const QuantumState &state, std::span<const Gate> sequence, const std::string &target);

}  // namespace teleport
