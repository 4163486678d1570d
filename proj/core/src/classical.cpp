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

#include "teleport/classical.hpp"

#include <cmath>
#include <sstream>

#include "teleport/common.hpp"

namespace teleport::classical {

void validate_probability(double p_zero) {
    if (!std::isfinite(p_zero) || p_zero < 0.0 || p_zero > 1.0) {
        throw DomainError("source probability must lie in [0, 1], got " + std::to_string(p_zero));
    }
}

BitSource::BitSource(double p_zero, std::uint64_t seed) : p_(p_zero), rng_(seed) {
    validate_probability(p_zero);
}

Bit BitSource::draw() {
    return rng_.bernoulli(p_) ? Bit::Zero : Bit::One;
}

SharedKey::SharedKey(std::vector<Pair> pairs) : pairs_(std::move(pairs)), used_(pairs_.size(), false) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].alice != pairs_[i].bob) {
            throw DomainError("key pair " + std::to_string(i) + " is not correlated");
        }
    }
}

SharedKey SharedKey::generate(std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Pair> pairs;
    pairs.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        Bit b = to_bit(rng.bernoulli(0.5));
        pairs.push_back({b, b});
    }
    return SharedKey(std::move(pairs));
}

std::size_t SharedKey::remaining() const noexcept {
    std::size_t n = 0;
    for (bool u : used_) {
        n += u ? 0 : 1;
    }
    return n;
}

SharedKey::Pair SharedKey::take(std::size_t index) {
    if (index >= pairs_.size()) {
        throw KeyReuseError("key pair " + std::to_string(index) + " does not exist (key length " +
                            std::to_string(pairs_.size()) + ")");
    }
    if (used_[index]) {
        throw KeyReuseError("key pair " + std::to_string(index) + " was already used");
    }
    used_[index] = true;
    return pairs_[index];
}

SharedKey::Pair SharedKey::take_next() {
    while (cursor_ < used_.size() && used_[cursor_]) {
        ++cursor_;
    }
    if (cursor_ == used_.size()) {
        throw KeyReuseError("shared key exhausted; refusing to reuse a pair");
    }
    return take(cursor_);
}

Bit otp_encode(Bit a, Bit key_alice) {
    return a ^ key_alice;
}

Bit otp_decode(Bit communicated, Bit key_bob) {
    return communicated ^ key_bob;
}

Bit delocalize(Bit d, Bit x) {
    return d ^ x;
}

Bit localize(Bit x_updated, Bit y) {
    return x_updated ^ y;
}

BiasEstimate bias_of(std::span<const Bit> stream) {
    if (stream.empty()) {
        throw DomainError("bias_of needs a non-empty stream");
    }
    std::size_t zeros = 0;
    for (Bit b : stream) {
        zeros += b == Bit::Zero ? 1 : 0;
    }
    const double n = static_cast<double>(stream.size());
    const double f = static_cast<double>(zeros) / n;
    return BiasEstimate{stream.size(), f, std::sqrt(f * (1.0 - f) / n)};
}

OtpRun run_otp(BitSource &source, SharedKey &key, std::size_t shots, CopyPolicy policy) {
    if (shots == 0) {
        throw DomainError("run_otp needs at least one shot");
    }
    if (key.remaining() < shots) {
        throw KeyReuseError("key has " + std::to_string(key.remaining()) + " unused pairs for " +
                            std::to_string(shots) + " shots");
    }
    OtpRun run;
    run.transcripts.reserve(shots);
    std::vector<Bit> inputs, sent, recovered;
    for (std::size_t i = 0; i < shots; ++i) {
        ClassicalTranscript t;
        t.input = source.draw();
        t.key = key.take_next();
        std::optional<Bit> alice_a = t.input;
        t.communicated = otp_encode(*alice_a, t.key.alice);
        if (policy == CopyPolicy::DestroyCopy) {
            // One-output XOR: nothing downstream may read a after this point.
            alice_a.reset();
        } else {
            run.alice_copies.push_back(*alice_a);
        }
        t.recovered = otp_decode(t.communicated, t.key.bob);
        inputs.push_back(t.input);
        sent.push_back(t.communicated);
        recovered.push_back(t.recovered);
        run.transcripts.push_back(t);
    }
    run.input_bias = bias_of(inputs);
    run.communicated_bias = bias_of(sent);
    run.recovered_bias = bias_of(recovered);
    return run;
}

std::array<OtpRow, 4> otp_truth_table(double p_zero) {
    validate_probability(p_zero);
    std::array<OtpRow, 4> rows{};
    std::size_t i = 0;
    for (Bit a : kBits) {
        double w = (a == Bit::Zero ? p_zero : 1.0 - p_zero) * 0.5;
        for (Bit k : kBits) {
            Bit c = otp_encode(a, k);
            rows[i++] = OtpRow{a, k, k, c, otp_decode(c, k), w};
        }
    }
    return rows;
}

std::array<DelocalizationRow, 4> delocalization_table(double p_zero) {
    validate_probability(p_zero);
    std::array<DelocalizationRow, 4> rows{};
    std::size_t i = 0;
    for (Bit d : kBits) {
        double w = (d == Bit::Zero ? p_zero : 1.0 - p_zero) * 0.5;
        for (Bit x : kBits) {
            Bit y = x;
            Bit xu = delocalize(d, x);
            rows[i++] = DelocalizationRow{d, x, y, xu, localize(xu, y), w};
        }
    }
    return rows;
}

OtpDistribution otp_distribution(double p_zero) {
    OtpDistribution dist;
    for (const auto &row : otp_truth_table(p_zero)) {
        dist.joint[to_int(row.a)][to_int(row.communicated)] += row.probability;
        dist.input[to_int(row.a)] += row.probability;
        dist.communicated[to_int(row.communicated)] += row.probability;
        dist.recovered[to_int(row.recovered)] += row.probability;
    }
    return dist;
}

double prob_updated_zero(double p_zero) {
    double total = 0.0;
    for (const auto &row : delocalization_table(p_zero)) {
        double conditional = row.x_updated == Bit::Zero ? 1.0 : 0.0;
        total += conditional * row.probability;
    }
    return total;
}

std::vector<DelocalizationRow> run_delocalize(BitSource &source, SharedKey &key, std::size_t shots) {
    if (shots == 0) {
        throw DomainError("run_delocalize needs at least one shot");
    }
    std::vector<DelocalizationRow> rows;
    rows.reserve(shots);
    const double p = source.p_zero();
    for (std::size_t i = 0; i < shots; ++i) {
        Bit d = source.draw();
        auto pair = key.take_next();
        Bit xu = delocalize(d, pair.alice);
        rows.push_back({d, pair.alice, pair.bob, xu, localize(xu, pair.bob), (d == Bit::Zero ? p : 1.0 - p) * 0.5});
    }
    return rows;
}

namespace {

std::string fmt_prob(double p) {
    std::ostringstream os;
    os.precision(17);
    os << p;
    return os.str();
}

}  // namespace

std::string otp_csv(std::span<const OtpRow> rows) {
    std::string out = "a,A,B,a^A,(a^A)^B,probability\n";
    for (const auto &r : rows) {
        out += std::to_string(to_int(r.a)) + "," + std::to_string(to_int(r.key_alice)) + "," +
               std::to_string(to_int(r.key_bob)) + "," + std::to_string(to_int(r.communicated)) + "," +
               std::to_string(to_int(r.recovered)) + "," + fmt_prob(r.probability) + "\n";
    }
    return out;
}

std::string delocalization_csv(std::span<const DelocalizationRow> rows) {
    std::string out = "d,x,y,x~,x~^y,probability\n";
    for (const auto &r : rows) {
        out += std::to_string(to_int(r.d)) + "," + std::to_string(to_int(r.x)) + "," + std::to_string(to_int(r.y)) +
               "," + std::to_string(to_int(r.x_updated)) + "," + std::to_string(to_int(r.parity)) + "," +
               fmt_prob(r.probability) + "\n";
    }
    return out;
}

}  // namespace teleport::classical
