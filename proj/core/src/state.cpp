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

#include "teleport/state.hpp"

#include <cmath>
#include <numbers>

namespace teleport {

DensityMatrix detail::density_unchecked(Register reg, Matrix m) {
    return DensityMatrix(std::move(reg), std::move(m), true);
}

void BlochParams::validate() const {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi / 2) {
        throw DomainError("theta must lie in [0, pi/2], got " + std::to_string(theta));
    }
    if (!std::isfinite(phi) || phi < 0.0 || phi >= 2 * std::numbers::pi) {
        throw DomainError("phi must lie in [0, 2pi), got " + std::to_string(phi));
    }
}

StateVector::StateVector(Register reg, Vector amplitudes) : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.size()) != reg_.dimension()) {
        throw DomainError("amplitude count " + std::to_string(amps_.size()) + " does not match register " +
                          reg_.to_string());
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > kTolerance) {
        throw DomainError("state vector is not normalized");
    }
}

StateVector StateVector::normalized(Register reg, Vector amplitudes) {
    double n = amplitudes.norm();
    if (!(n > 0.0)) {
        throw DomainError("cannot normalize the zero vector");
    }
    amplitudes /= n;
    return StateVector(std::move(reg), std::move(amplitudes));
}

Complex StateVector::inner(const StateVector &other) const {
    if (reg_ != other.reg_) {
        throw DomainError("inner product across registers " + reg_.to_string() + " and " + other.reg_.to_string());
    }
    return amps_.dot(other.amps_);
}

StateVector StateVector::with_global_phase(double angle) const {
    return StateVector(reg_, amps_ * std::polar(1.0, angle));
}

DensityMatrix::DensityMatrix(Register reg, Matrix matrix, bool) : reg_(std::move(reg)), m_(std::move(matrix)) {
}

DensityMatrix::DensityMatrix(Register reg, Matrix matrix) : reg_(std::move(reg)), m_(std::move(matrix)) {
    const auto dim = static_cast<Eigen::Index>(reg_.dimension());
    if (m_.rows() != dim || m_.cols() != dim) {
        throw DomainError("density matrix shape does not match register " + reg_.to_string());
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > kTolerance) {
        throw DomainError("density matrix trace is not 1");
    }
    if (eigenvalues().minCoeff() < -kTolerance) {
        throw DomainError("density matrix has a negative eigenvalue");
    }
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::string to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus:
            return "Phi+";
        case BellKind::PhiMinus:
            return "Phi-";
        case BellKind::PsiPlus:
            return "Psi+";
        case BellKind::PsiMinus:
            return "Psi-";
    }
    return "?";
}

StateVector computational_state(const Register &reg, std::size_t index) {
    if (index >= reg.dimension()) {
        throw DomainError("basis index out of range for register " + reg.to_string());
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(reg.dimension()));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(reg, std::move(v));
}

StateVector bloch_state(const BlochParams &params, const std::string &label) {
    params.validate();
    Vector v(2);
    v << std::cos(params.theta), std::polar(std::sin(params.theta), params.phi);
    return StateVector(Register{label}, std::move(v));
}

StateVector bell_state(BellKind kind, const std::string &first, const std::string &second) {
    if (first == second) {
        throw DomainError("bell_state needs two distinct labels, got '" + first + "' twice");
    }
    const double h = std::numbers::sqrt2 / 2;
    Vector v = Vector::Zero(4);
    switch (kind) {
        case BellKind::PhiPlus:
            v(0) = h;
            v(3) = h;
            break;
        case BellKind::PhiMinus:
            v(0) = h;
            v(3) = -h;
            break;
        case BellKind::PsiPlus:
            v(1) = h;
            v(2) = h;
            break;
        case BellKind::PsiMinus:
            v(1) = h;
            v(2) = -h;
            break;
    }
    return StateVector(Register{first, second}, std::move(v));
}

StateVector tensor(const StateVector &lhs, const StateVector &rhs) {
    Register reg = lhs.reg().concat(rhs.reg());
    const auto &a = lhs.amplitudes();
    const auto &b = rhs.amplitudes();
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return StateVector(std::move(reg), std::move(out));
}

DensityMatrix tensor(const DensityMatrix &lhs, const DensityMatrix &rhs) {
    Register reg = lhs.reg().concat(rhs.reg());
    const auto &a = lhs.matrix();
    const auto &b = rhs.matrix();
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return DensityMatrix(std::move(reg), std::move(out));
}

DensityMatrix density_from(const StateVector &state) {
    const auto &v = state.amplitudes();
    return detail::density_unchecked(state.reg(), v * v.adjoint());
}

DensityMatrix to_density(const QuantumState &state) {
    if (const auto *sv = std::get_if<StateVector>(&state)) {
        return density_from(*sv);
    }
    return std::get<DensityMatrix>(state);
}

const Register &register_of(const QuantumState &state) {
    return std::visit([](const auto &s) -> const Register & { return s.reg(); }, state);
}

namespace {

template <typename State>
DensityMatrix mix_impl(std::span<const std::pair<double, State>> components) {
    if (components.empty()) {
        throw DomainError("mix needs at least one component");
    }
    const Register &reg = components.front().second.reg();
    Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(reg.dimension()), static_cast<Eigen::Index>(reg.dimension()));
    double total = 0.0;
    for (const auto &[w, s] : components) {
        if (!(w >= 0.0)) {
            throw DomainError("mix weights must be non-negative");
        }
        if (s.reg() != reg) {
            throw DomainError("mix components use different registers: " + reg.to_string() + " vs " +
                              s.reg().to_string());
        }
        total += w;
        if constexpr (std::is_same_v<State, StateVector>) {
            acc += w * (s.amplitudes() * s.amplitudes().adjoint());
        } else {
            acc += w * s.matrix();
        }
    }
    if (std::abs(total - 1.0) > kTolerance) {
        throw DomainError("mix weights sum to " + std::to_string(total) + ", expected 1");
    }
    return DensityMatrix(reg, std::move(acc));
}

}  // namespace

DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> components) {
    return mix_impl(components);
}

DensityMatrix mix(std::span<const std::pair<double, StateVector>> components) {
    return mix_impl(components);
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::string> keep) {
    const Register &reg = rho.reg();
    IndexSplit split(reg.size(), reg.positions(keep));
    const auto kd = static_cast<Eigen::Index>(split.selected_dimension());
    Matrix out = Matrix::Zero(kd, kd);
    for (std::size_t r = 0; r < split.rest_dimension(); ++r) {
        for (Eigen::Index i = 0; i < kd; ++i) {
            for (Eigen::Index j = 0; j < kd; ++j) {
                out(i, j) += rho(split.compose(r, static_cast<std::size_t>(i)), split.compose(r, static_cast<std::size_t>(j)));
            }
        }
    }
    return detail::density_unchecked(Register(std::vector<std::string>(keep.begin(), keep.end())), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<std::string> keep) {
    std::vector<std::string> k(keep);
    return partial_trace(rho, std::span<const std::string>(k));
}

}  // namespace teleport
