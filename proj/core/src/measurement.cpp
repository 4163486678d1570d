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

#include "teleport/measurement.hpp"

#include <numbers>

namespace teleport {

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::Z:
            return "z";
        case BasisKind::X:
            return "x";
        case BasisKind::Bell:
            return "bell";
    }
    return "?";
}

MeasurementBasis::MeasurementBasis(BasisKind kind, std::size_t arity, std::vector<Vector> vectors,
                                   std::vector<std::string> names)
    : kind_(kind), arity_(arity), vectors_(std::move(vectors)), names_(std::move(names)) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity_);
    Matrix sum = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        for (std::size_t j = 0; j < vectors_.size(); ++j) {
            Complex ip = vectors_[i].dot(vectors_[j]);
            if (std::abs(ip - Complex(i == j ? 1.0 : 0.0)) > kTolerance) {
                throw DomainError("measurement basis vectors are not orthonormal");
            }
        }
        sum += projector(i);
    }
    if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > kTolerance) {
        throw DomainError("measurement projectors do not sum to identity");
    }
}

Matrix MeasurementBasis::projector(std::size_t k) const {
    const Vector &v = vectors_.at(k);
    return v * v.adjoint();
}

MeasurementBasis MeasurementBasis::z() {
    Vector zero(2), one(2);
    zero << 1, 0;
    one << 0, 1;
    return MeasurementBasis(BasisKind::Z, 1, {zero, one}, {"0", "1"});
}

MeasurementBasis MeasurementBasis::x() {
    const double h = std::numbers::sqrt2 / 2;
    Vector plus(2), minus(2);
    plus << h, h;
    minus << h, -h;
    return MeasurementBasis(BasisKind::X, 1, {plus, minus}, {"+", "-"});
}

MeasurementBasis MeasurementBasis::bell() {
    std::vector<Vector> vs;
    std::vector<std::string> names;
    for (auto kind : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
        vs.push_back(bell_state(kind, "p", "q").amplitudes());
        names.push_back(to_string(kind));
    }
    return MeasurementBasis(BasisKind::Bell, 2, std::move(vs), std::move(names));
}

namespace {

// Row r of the result is <v|_targets applied to the rest index r.
Matrix contraction(const MeasurementBasis &basis, std::size_t k, const Register &reg, const IndexSplit &split) {
    const Vector &v = basis.vector(k);
    Matrix kraus = Matrix::Zero(static_cast<Eigen::Index>(split.rest_dimension()),
                                static_cast<Eigen::Index>(reg.dimension()));
    for (std::size_t full = 0; full < reg.dimension(); ++full) {
        kraus(static_cast<Eigen::Index>(split.rest_index(full)), static_cast<Eigen::Index>(full)) =
            std::conj(v(static_cast<Eigen::Index>(split.selected_index(full))));
    }
    return kraus;
}

void check_targets(const MeasurementBasis &basis, std::span<const std::string> targets) {
    if (targets.size() != basis.arity()) {
        throw DomainError(to_string(basis.kind()) + " measurement acts on " + std::to_string(basis.arity()) +
                          " qubit(s), got " + std::to_string(targets.size()));
    }
}

Outcome make_outcome(const MeasurementBasis &basis, std::span<const std::string> targets, std::size_t k) {
    return Outcome{std::vector<std::string>(targets.begin(), targets.end()), basis.kind(), k, basis.outcome_name(k)};
}

}  // namespace

BranchSet<StateVector> measure(const StateVector &state, const MeasurementBasis &basis,
                               std::span<const std::string> targets) {
    check_targets(basis, targets);
    const Register &reg = state.reg();
    IndexSplit split(reg.size(), reg.positions(targets));
    Register rest = reg.without(targets);
    BranchSet<StateVector> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Vector post = contraction(basis, k, reg, split) * state.amplitudes();
        double p = post.squaredNorm();
        if (p <= kZeroProbability) {
            continue;
        }
        out.branches.push_back({p, {make_outcome(basis, targets, k)}, StateVector::normalized(rest, std::move(post))});
    }
    return out;
}

BranchSet<StateVector> measure(const StateVector &state, const MeasurementBasis &basis,
                               std::initializer_list<std::string> targets) {
    std::vector<std::string> t(targets);
    return measure(state, basis, std::span<const std::string>(t));
}

BranchSet<DensityMatrix> measure(const DensityMatrix &rho, const MeasurementBasis &basis,
                                 std::span<const std::string> targets) {
    check_targets(basis, targets);
    const Register &reg = rho.reg();
    IndexSplit split(reg.size(), reg.positions(targets));
    Register rest = reg.without(targets);
    BranchSet<DensityMatrix> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Matrix kraus = contraction(basis, k, reg, split);
        Matrix post = kraus * rho.matrix() * kraus.adjoint();
        double p = post.trace().real();
        if (p <= kZeroProbability) {
            continue;
        }
        post /= p;
        post = 0.5 * (post + post.adjoint()).eval();
        out.branches.push_back({p, {make_outcome(basis, targets, k)}, detail::density_unchecked(rest, std::move(post))});
    }
    return out;
}

BranchSet<DensityMatrix> measure(const DensityMatrix &rho, const MeasurementBasis &basis,
                                 std::initializer_list<std::string> targets) {
    std::vector<std::string> t(targets);
    return measure(rho, basis, std::span<const std::string>(t));
}

BranchSet<QuantumState> measure(const QuantumState &state, const MeasurementBasis &basis,
                                std::span<const std::string> targets) {
    BranchSet<QuantumState> out;
    std::visit(
        [&](const auto &s) {
            for (auto &b : measure(s, basis, targets).branches) {
                out.branches.push_back({b.probability, std::move(b.outcomes), QuantumState(std::move(b.post_state))});
            }
        },
        state);
    return out;
}

}  // namespace teleport
