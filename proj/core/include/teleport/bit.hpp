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
#include <ostream>

namespace teleport {

/// Two-valued classical bit. XOR and NOT are total.
enum class Bit : std::uint8_t { Zero = 0, One = 1 };

constexpr Bit operator^(Bit lhs, Bit rhs) noexcept {
    return static_cast<Bit>(static_cast<std::uint8_t>(lhs) ^ static_cast<std::uint8_t>(rhs));
}

constexpr Bit operator!(Bit b) noexcept {
    return b ^ Bit::One;
}

constexpr int to_int(Bit b) noexcept {
    return static_cast<int>(b);
}

constexpr Bit to_bit(bool value) noexcept {
    return value ? Bit::One : Bit::Zero;
}

inline constexpr Bit kBits[] = {Bit::Zero, Bit::One};

inline std::ostream &operator<<(std::ostream &os, Bit b) {
    return os << to_int(b);
}

}  // namespace teleport
