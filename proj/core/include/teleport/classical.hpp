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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "teleport/bit.hpp"
#include "teleport/rng.hpp"

namespace teleport::classical {

/// Emits 0 with probability p and 1 with probability 1 - p.
class BitSource {
  public:
    BitSource(double p_zero, std::uint64_t seed);

    double p_zero() const noexcept {
        return p_;
    }
    Bit draw();

  private:
    double p_;
    Rng rng_;
};

/// Raised on an attempt to use a key pair twice.
class KeyReuseError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Pre-shared correlated key: Alice's bit equals Bob's bit in every pair.
///
/// Each pair may be taken once.
class SharedKey {
  public:
    struct Pair {
        Bit alice;
        Bit bob;
    };

    /// Throws DomainError if any pair has alice != bob.
    explicit SharedKey(std::vector<Pair> pairs);
    /// `length` unbiased pairs drawn from `seed`.
    static SharedKey generate(std::size_t length, std::uint64_t seed);

    std::size_t size() const noexcept {
        return pairs_.size();
    }
    std::size_t remaining() const noexcept;
    bool used(std::size_t index) const {
        return used_.at(index);
    }
    const std::vector<Pair> &pairs() const noexcept {
        return pairs_;
    }

    /// Marks pair `index` consumed; throws KeyReuseError if it already was.
    Pair take(std::size_t index);
    /// Takes the lowest unused pair.
    Pair take_next();

  private:
    std::vector<Pair> pairs_;
    std::vector<bool> used_;
    std::size_t cursor_ = 0;
};

Bit otp_encode(Bit a, Bit key_alice);
Bit otp_decode(Bit communicated, Bit key_bob);

/// Hides d in the parity of (x, y) by replacing x with d ^ x.
Bit delocalize(Bit d, Bit x);
/// Recovers d from the parity of the updated x and the untouched y.
Bit localize(Bit x_updated, Bit y);

struct BiasEstimate {
    std::size_t count = 0;
    double frequency_zero = 0.0;
    /// Binomial standard error sqrt(f (1 - f) / N).
    double standard_error = 0.0;
};

/// Throws DomainError on an empty stream.
BiasEstimate bias_of(std::span<const Bit> stream);

struct ClassicalTranscript {
    Bit input = Bit::Zero;
    SharedKey::Pair key{Bit::Zero, Bit::Zero};
    Bit communicated = Bit::Zero;
    Bit recovered = Bit::Zero;

    bool operator==(const ClassicalTranscript &o) const {
        return input == o.input && key.alice == o.key.alice && key.bob == o.key.bob &&
               communicated == o.communicated && recovered == o.recovered;
    }
};

enum class CopyPolicy { KeepCopy, DestroyCopy };

struct OtpRun {
    std::vector<ClassicalTranscript> transcripts;
    /// Alice's retained copies of a; empty under CopyPolicy::DestroyCopy.
    std::vector<Bit> alice_copies;
    BiasEstimate input_bias;
    BiasEstimate communicated_bias;
    BiasEstimate recovered_bias;
};

/// One-time pad over `shots` bits from `source`, one fresh key pair per shot.
///
/// Throws DomainError if shots is 0 and KeyReuseError if the key runs out of
/// unused pairs.
OtpRun run_otp(BitSource &source, SharedKey &key, std::size_t shots, CopyPolicy policy = CopyPolicy::KeepCopy);

/// Row of the one-time-pad truth table: a, A, B, a^A, (a^A)^B, and its weight.
struct OtpRow {
    Bit a, key_alice, key_bob, communicated, recovered;
    double probability;
};

/// Rows in the order a = 0 (A = 0, 1) then a = 1 (A = 0, 1), weighted p/2 and (1-p)/2.
std::array<OtpRow, 4> otp_truth_table(double p_zero);

/// Row of the delocalization table: d, x, y, x~ = d^x, x~^y, and its weight.
struct DelocalizationRow {
    Bit d, x, y, x_updated, parity;
    double probability;
};

std::array<DelocalizationRow, 4> delocalization_table(double p_zero);

/// Exact distributions obtained by enumerating the tables.
struct OtpDistribution {
    /// P(a = i, communicated = j).
    std::array<std::array<double, 2>, 2> joint{};
    std::array<double, 2> input{};
    std::array<double, 2> communicated{};
    std::array<double, 2> recovered{};
};

OtpDistribution otp_distribution(double p_zero);

/// P(x~ = 0) summed term by term over (d, x) with weights p/2, p/2, (1-p)/2, (1-p)/2.
double prob_updated_zero(double p_zero);

/// Sampled delocalization runs: d from `source`, x = y from `key`.
std::vector<DelocalizationRow> run_delocalize(BitSource &source, SharedKey &key, std::size_t shots);

std::string otp_csv(std::span<const OtpRow> rows);
std::string delocalization_csv(std::span<const DelocalizationRow> rows);

void validate_probability(double p_zero);

}  // namespace teleport::classical
