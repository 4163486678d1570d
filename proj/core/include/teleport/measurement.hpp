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

#include "teleport/rng.hpp"
#include "teleport/state.hpp"

namespace teleport {

enum class BasisKind { Z, X, Bell };

std::string to_string(BasisKind kind);

/// Complete set of orthonormal rank-one projectors on one or two qubits.
class MeasurementBasis {
  public:
    /// |0>, |1>; outcomes "0", "1".
    static MeasurementBasis z();
    /// |+>, |->; outcomes "+", "-".
    static MeasurementBasis x();
    /// Phi+, Phi-, Psi+, Psi- (in that order) on an ordered pair.
    static MeasurementBasis bell();

    BasisKind kind() const noexcept {
        return kind_;
    }
    std::size_t arity() const noexcept {
        return arity_;
    }
    std::size_t size() const noexcept {
        return vectors_.size();
    }
    const Vector &vector(std::size_t k) const {
        return vectors_.at(k);
    }
    const std::string &outcome_name(std::size_t k) const {
        return names_.at(k);
    }
    Matrix projector(std::size_t k) const;

  private:
    MeasurementBasis(BasisKind kind, std::size_t arity, std::vector<Vector> vectors, std::vector<std::string> names);

    BasisKind kind_;
    std::size_t arity_;
    std::vector<Vector> vectors_;
    std::vector<std::string> names_;
};

/// Record of one measurement result.
struct Outcome {
    std::vector<std::string> labels;
    BasisKind basis = BasisKind::Z;
    std::size_t index = 0;
    std::string name;

    bool operator==(const Outcome &) const = default;
};

template <typename State>
struct Branch {
    double probability = 0.0;
    std::vector<Outcome> outcomes;
    State post_state;
};

/// Every possible outcome with non-zero probability.
///
/// Impossible branches are left out, so no entry carries an undefined
/// post-state. Measured qubits are removed from each post-state's register.
template <typename State>
struct BranchSet {
    std::vector<Branch<State>> branches;

    std::size_t size() const noexcept {
        return branches.size();
    }
    double total_probability() const {
        double t = 0.0;
        for (const auto &b : branches) {
            t += b.probability;
        }
        return t;
    }
};

BranchSet<StateVector> measure(const StateVector &state, const MeasurementBasis &basis,
                               std::span<const std::string> targets);
BranchSet<StateVector> measure(const StateVector &state, const MeasurementBasis &basis,
                               std::initializer_list<std::string> targets);
BranchSet<DensityMatrix> measure(const DensityMatrix &rho, const MeasurementBasis &basis,
                                 std::span<const std::string> targets);
BranchSet<DensityMatrix> measure(const DensityMatrix &rho, const MeasurementBasis &basis,
                                 std::initializer_list<std::string> targets);
BranchSet<QuantumState> measure(const QuantumState &state, const MeasurementBasis &basis,
                                std::span<const std::string> targets);

/// Measures every branch of `set` again, multiplying probabilities and
/// appending outcomes.
template <typename State>
BranchSet<State> then_measure(const BranchSet<State> &set, const MeasurementBasis &basis,
                              std::span<const std::string> targets) {
    BranchSet<State> out;
    for (const auto &b : set.branches) {
        for (auto &next : measure(b.post_state, basis, targets).branches) {
            next.probability *= b.probability;
            std::vector<Outcome> outcomes = b.outcomes;
            outcomes.insert(outcomes.end(), next.outcomes.begin(), next.outcomes.end());
            next.outcomes = std::move(outcomes);
            out.branches.push_back(std::move(next));
        }
    }
    return out;
}

/// Draws one branch according to the Born rule.
template <typename State>
Branch<State> sample(BranchSet<State> set, Rng &rng) {
    if (set.branches.empty()) {
        throw DomainError("cannot sample from an empty branch set");
    }
    double u = rng.uniform() * set.total_probability();
    double acc = 0.0;
    for (auto &b : set.branches) {
        acc += b.probability;
        if (u < acc) {
            return std::move(b);
        }
    }
    return std::move(set.branches.back());
}

template <typename State>
Branch<State> measure_sample(const State &state, const MeasurementBasis &basis, std::span<const std::string> targets,
                             Rng &rng) {
    return sample(measure(state, basis, targets), rng);
}

}  // namespace teleport
