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

#include <cstdint>
#include <random>

namespace teleport {

/// Seeded random stream with platform-independent output.
///
/// Uses std::mt19937_64 (fully specified by the standard) and converts to
/// doubles by hand, since std::uniform_real_distribution is not portable
/// across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    /// Sub-stream `stream` of master seed `seed`; deterministic and
    /// decorrelated from neighbouring stream ids.
    static Rng derive(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p_true) {
        return uniform() < p_true;
    }

  private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for shot `shot` of a run driven by `master`.
inline std::uint64_t shot_seed(std::uint64_t master, std::uint64_t shot) {
    return Rng::derive(master, shot).next_u64();
}

}  // namespace teleport
