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

#include "teleport/metrics.hpp"

#include <algorithm>
#include <functional>

#include "teleport/gate.hpp"

namespace teleport {

namespace {

void require_same_register(const Register &lhs, const Register &rhs, const char *op) {
    if (lhs != rhs) {
        throw DomainError(std::string(op) + ": register mismatch " + lhs.to_string() + " vs " + rhs.to_string());
    }
}

void require_two_qubits(const Register &reg) {
    if (reg.size() != 2) {
        throw DomainError("concurrence needs a two-qubit register, got " + reg.to_string());
    }
}

}  // namespace

double fidelity(const DensityMatrix &rho, const StateVector &target) {
    require_same_register(rho.reg(), target.reg(), "fidelity");
    const Vector &t = target.amplitudes();
    double f = t.dot(rho.matrix() * t).real();
    return std::clamp(f, 0.0, 1.0);
}

double fidelity(const StateVector &lhs, const StateVector &rhs) {
    return std::clamp(std::norm(lhs.inner(rhs)), 0.0, 1.0);
}

double fidelity(const QuantumState &state, const StateVector &target) {
    return std::visit([&](const auto &s) { return fidelity(s, target); }, state);
}

double trace_distance(const DensityMatrix &lhs, const DensityMatrix &rhs) {
    require_same_register(lhs.reg(), rhs.reg(), "trace_distance");
    Matrix diff = lhs.matrix() - rhs.matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double max_abs_diff(const DensityMatrix &lhs, const DensityMatrix &rhs) {
    require_same_register(lhs.reg(), rhs.reg(), "max_abs_diff");
    return (lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff();
}

double concurrence(const DensityMatrix &rho) {
    require_two_qubits(rho.reg());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
    const auto &vals = solver.eigenvalues();
    const auto &vecs = solver.eigenvectors();
    std::vector<Vector> columns;
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        if (vals(k) > kTolerance) {
            columns.push_back(std::sqrt(vals(k)) * vecs.col(k));
        }
    }
    Matrix w(4, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t k = 0; k < columns.size(); ++k) {
        w.col(static_cast<Eigen::Index>(k)) = columns[k];
    }
    const Matrix y = gates::pauli_y().matrix();
    Matrix yy(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            yy.block(2 * i, 2 * j, 2, 2) = y(i, j) * y;
        }
    }
    Matrix tau = w.transpose() * yy * w;
    Eigen::JacobiSVD<Matrix> svd(tau);
    std::vector<double> sv(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
    std::sort(sv.begin(), sv.end(), std::greater<>());
    if (sv.empty()) {
        return 0.0;
    }
    double c = sv[0];
    for (std::size_t k = 1; k < sv.size(); ++k) {
        c -= sv[k];
    }
    return std::clamp(c, 0.0, 1.0);
}

double concurrence(const StateVector &state) {
    require_two_qubits(state.reg());
    return std::min(1.0, 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]));
}

}  // namespace teleport
