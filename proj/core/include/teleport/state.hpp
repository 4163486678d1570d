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
#include <utility>
#include <variant>
#include <vector>

#include "teleport/common.hpp"
#include "teleport/register.hpp"

namespace teleport {

/// Polar/azimuthal pair for cos(theta)|0> + e^{i phi} sin(theta)|1>.
///
/// theta lies in [0, pi/2] and phi in [0, 2 pi). Inputs outside that range are
/// rejected rather than folded back onto the sphere.
struct BlochParams {
    double theta = 0.0;
    double phi = 0.0;

    void validate() const;
};

class DensityMatrix;

namespace detail {
// Skips the validation in DensityMatrix's public constructor. Only for results
// of operations that preserve the invariants by construction.
DensityMatrix density_unchecked(Register reg, Matrix matrix);
}  // namespace detail

/// Normalized pure state over a labeled register.
class StateVector {
  public:
    /// Throws DomainError unless the amplitudes have unit norm (1e-12).
    StateVector(Register reg, Vector amplitudes);

    /// Normalizes `amplitudes` first; throws if the norm is zero.
    static StateVector normalized(Register reg, Vector amplitudes);

    const Register &reg() const noexcept {
        return reg_;
    }
    const Vector &amplitudes() const noexcept {
        return amps_;
    }
    std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(amps_.size());
    }
    Complex operator[](std::size_t i) const {
        return amps_(static_cast<Eigen::Index>(i));
    }

    double norm() const {
        return amps_.norm();
    }
    Complex inner(const StateVector &other) const;

    /// Same state with amplitudes multiplied by e^{i angle}.
    StateVector with_global_phase(double angle) const;

  private:
    Register reg_;
    Vector amps_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over a labeled register.
class DensityMatrix {
  public:
    /// Throws DomainError unless hermiticity, trace and positivity hold to 1e-12.
    DensityMatrix(Register reg, Matrix matrix);

    const Register &reg() const noexcept {
        return reg_;
    }
    const Matrix &matrix() const noexcept {
        return m_;
    }
    std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(m_.rows());
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    double trace() const {
        return m_.trace().real();
    }
    double purity() const;
    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;

  private:
    DensityMatrix(Register reg, Matrix matrix, bool /*unchecked*/);
    friend DensityMatrix detail::density_unchecked(Register, Matrix);

    Register reg_;
    Matrix m_;
};

using QuantumState = std::variant<StateVector, DensityMatrix>;

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string to_string(BellKind kind);

StateVector computational_state(const Register &reg, std::size_t index);
StateVector bloch_state(const BlochParams &params, const std::string &label = "a");
StateVector bell_state(BellKind kind, const std::string &first, const std::string &second);

StateVector tensor(const StateVector &lhs, const StateVector &rhs);
DensityMatrix tensor(const DensityMatrix &lhs, const DensityMatrix &rhs);

DensityMatrix density_from(const StateVector &state);
DensityMatrix to_density(const QuantumState &state);
const Register &register_of(const QuantumState &state);

/// Convex combination of states over one register.
///
/// Weights must be non-negative and sum to 1 within 1e-12; every component must
/// use the same register (same labels, same order).
DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> components);
DensityMatrix mix(std::span<const std::pair<double, StateVector>> components);

/// Reduced state on `keep`, in the order given by `keep`.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::string> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<std::string> keep);

}  // namespace teleport
