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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace teleport {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Absolute tolerance for every exact-arithmetic check (dense algebra, dim <= 16).
inline constexpr double kTolerance = 1e-12;

// Branches whose Born probability falls below this are treated as impossible.
inline constexpr double kZeroProbability = 1e-24;

inline constexpr std::size_t kMaxQubits = 4;

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {
    }
};

}  // namespace teleport
