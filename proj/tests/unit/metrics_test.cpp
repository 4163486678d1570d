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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "teleport/gate.hpp"

using namespace teleport;

namespace {
constexpr double kPi = std::numbers::pi;

DensityMatrix diag2(double p0, const std::string &label = "a") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = p0;
    m(1, 1) = 1 - p0;
    return DensityMatrix(Register{label}, m);
}

StateVector schmidt_state(double theta, double phi) {
    Vector v = Vector::Zero(4);
    v(0) = std::cos(theta);
    v(3) = std::polar(std::sin(theta), phi);
    return StateVector(Register{"a", "B"}, v);
}
}  // namespace

TEST(Fidelity, examples) {
    auto psi = bloch_state({0.9, 2.0});
    EXPECT_NEAR(fidelity(density_from(psi), psi), 1.0, kTolerance);
    EXPECT_NEAR(fidelity(diag2(0.5), computational_state(Register{"a"}, 0)), 0.5, kTolerance);
    EXPECT_THROW(fidelity(diag2(0.5, "B"), psi), DomainError);
}

TEST(Fidelity, decohered_state_matches_direct_expansion) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> th(0, kPi / 2), ph(0, 2 * kPi);
    for (int i = 0; i < 100; ++i) {
        double theta = th(rng), phi = ph(rng);
        double c2 = std::pow(std::cos(theta), 2);
        oracle::Mat2 rho = {{{c2, 0}, {0, 1 - c2}}};
        double expected = oracle::expectation(rho, oracle::payload(theta, phi));
        EXPECT_NEAR(fidelity(diag2(c2), bloch_state({theta, phi})), expected, kTolerance);
        EXPECT_NEAR(expected, std::pow(std::cos(theta), 4) + std::pow(std::sin(theta), 4), kTolerance);
    }
}

TEST(Fidelity, global_phase_invariance) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    auto target = bloch_state({0.4, 0.2}, "a");
    for (int i = 0; i < 50; ++i) {
        auto s = bloch_state({0.7, 1.3});
        auto shifted = s.with_global_phase(u(rng));
        EXPECT_NEAR(fidelity(s, target), fidelity(shifted, target), kTolerance);
        EXPECT_NEAR(fidelity(density_from(s), target), fidelity(density_from(shifted), target), kTolerance);
        EXPECT_LT(max_abs_diff(density_from(s), density_from(shifted)), kTolerance);
    }
}

TEST(Concurrence, examples) {
    EXPECT_NEAR(concurrence(density_from(bell_state(BellKind::PhiPlus, "A", "B"))), 1.0, kTolerance);
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    EXPECT_NEAR(concurrence(DensityMatrix(Register{"A", "B"}, m)), 0.0, kTolerance);
    EXPECT_NEAR(concurrence(density_from(tensor(bloch_state({0.3, 1.0}, "a"), bloch_state({1.0, 3.0}, "B")))), 0.0,
                1e-9);
    EXPECT_THROW(concurrence(diag2(0.5)), DomainError);
}

TEST(Concurrence, matches_schmidt_oracle) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> th(0, kPi / 2), ph(0, 2 * kPi);
    for (int i = 0; i < 200; ++i) {
        double theta = th(rng), phi = ph(rng);
        oracle::Mat2 coeff = {{{std::cos(theta), 0}, {0, std::polar(std::sin(theta), phi)}}};
        double expected = oracle::schmidt_concurrence(coeff);
        EXPECT_NEAR(expected, std::abs(std::sin(2 * theta)), kTolerance);
        auto s = schmidt_state(theta, phi);
        EXPECT_NEAR(concurrence(density_from(s)), expected, 1e-9);
        EXPECT_NEAR(concurrence(s), expected, kTolerance);
    }
}

TEST(Concurrence, werner_states) {
    // p |Psi-><Psi-| + (1 - p) I/4 has concurrence max(0, (3p - 1)/2).
    for (double p : {0.0, 0.2, 1.0 / 3, 0.5, 0.8, 1.0}) {
        Matrix psi = density_from(bell_state(BellKind::PsiMinus, "A", "B")).matrix();
        DensityMatrix rho(Register{"A", "B"}, p * psi + (1 - p) * Matrix::Identity(4, 4) / 4.0);
        EXPECT_NEAR(concurrence(rho), std::max(0.0, (3 * p - 1) / 2), 1e-9) << p;
    }
}

TEST(TraceDistance, basic) {
    EXPECT_NEAR(trace_distance(diag2(1.0), diag2(0.0)), 1.0, kTolerance);
    EXPECT_NEAR(trace_distance(diag2(0.3), diag2(0.3)), 0.0, kTolerance);
}
