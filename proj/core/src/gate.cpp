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

#include "teleport/gate.hpp"

#include <numbers>

namespace teleport {

Gate::Gate(std::string name, Matrix matrix) : name_(std::move(name)), m_(std::move(matrix)) {
    if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
        throw DomainError("gate '" + name_ + "' must be 2x2 or 4x4");
    }
    Matrix err = m_ * m_.adjoint() - Matrix::Identity(m_.rows(), m_.cols());
    if (err.cwiseAbs().maxCoeff() > kTolerance) {
        throw DomainError("gate '" + name_ + "' is not unitary");
    }
}

Gate Gate::adjoint() const {
    return Gate(name_ + "^dag", m_.adjoint());
}

Gate Gate::after(const Gate &first) const {
    if (first.arity() != arity()) {
        throw DomainError("cannot compose gates of different arity");
    }
    return Gate(name_ + "*" + first.name_, m_ * first.m_);
}

namespace gates {

Gate identity() {
    return Gate("I", Matrix::Identity(2, 2));
}

Gate pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Gate("X", m);
}

Gate pauli_y() {
    const Complex i(0, 1);
    Matrix m(2, 2);
    m << 0, -i, i, 0;
    return Gate("Y", m);
}

Gate pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return Gate("Z", m);
}

Gate hadamard() {
    const double h = std::numbers::sqrt2 / 2;
    Matrix m(2, 2);
    m << h, h, h, -h;
    return Gate("H", m);
}

Gate cnot() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return Gate("CNOT", m);
}

}  // namespace gates

Matrix embed(const Gate &gate, const Register &reg, std::span<const std::string> targets) {
    if (targets.size() != gate.arity()) {
        throw DomainError("gate '" + gate.name() + "' acts on " + std::to_string(gate.arity()) + " qubit(s), got " +
                          std::to_string(targets.size()) + " target(s)");
    }
    IndexSplit split(reg.size(), reg.positions(targets));
    const auto dim = static_cast<Eigen::Index>(reg.dimension());
    Matrix full = Matrix::Zero(dim, dim);
    const Matrix &g = gate.matrix();
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            auto ui = static_cast<std::size_t>(i);
            auto uj = static_cast<std::size_t>(j);
            if (split.rest_index(ui) == split.rest_index(uj)) {
                full(i, j) = g(static_cast<Eigen::Index>(split.selected_index(ui)),
                               static_cast<Eigen::Index>(split.selected_index(uj)));
            }
        }
    }
    return full;
}

StateVector apply_gate(const StateVector &state, const Gate &gate, std::span<const std::string> targets) {
    Vector out = embed(gate, state.reg(), targets) * state.amplitudes();
    return StateVector(state.reg(), std::move(out));
}

StateVector apply_gate(const StateVector &state, const Gate &gate, std::initializer_list<std::string> targets) {
    std::vector<std::string> t(targets);
    return apply_gate(state, gate, std::span<const std::string>(t));
}

DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate, std::span<const std::string> targets) {
    Matrix u = embed(gate, rho.reg(), targets);
    Matrix out = u * rho.matrix() * u.adjoint();
    return detail::density_unchecked(rho.reg(), 0.5 * (out + out.adjoint()));
}

DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &gate, std::initializer_list<std::string> targets) {
    std::vector<std::string> t(targets);
    return apply_gate(rho, gate, std::span<const std::string>(t));
}

QuantumState apply_gate(const QuantumState &state, const Gate &gate, std::span<const std::string> targets) {
    return std::visit([&](const auto &s) -> QuantumState { return apply_gate(s, gate, targets); }, state);
}

StateVector apply_sequence(const StateVector &state, std::span<const Gate> sequence, const std::string &target) {
    StateVector out = state;
    const std::string t[] = {target};
    for (const auto &g : sequence) {
        out = apply_gate(out, g, t);
    }
    return out;
}

QuantumState apply_sequence(const QuantumState &state, std::span<const Gate> sequence, const std::string &target) {
    QuantumState out = state;
    const std::string t[] = {target};
    for (const auto &g : sequence) {
        out = apply_gate(out, g, t);
    }
    return out;
}

}  // namespace teleport
