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
#include <string>
#include <string_view>
#include <vector>

#include "teleport/bit.hpp"
#include "teleport/gate.hpp"
#include "teleport/measurement.hpp"
#include "teleport/state.hpp"

namespace teleport {

enum class PartyName { Alice, Bob };
enum class ResourceKind { Entangled, ClassicalCorrelated };
enum class StopAfter { Step1, Step2 };
enum class ProtocolId { Standard, TwoStep };

std::string to_string(PartyName p);
std::string to_string(ResourceKind r);
std::string to_string(StopAfter s);
std::string to_string(ProtocolId p);

/// A laboratory: the qubits one side may measure or transform.
struct Party {
    PartyName name;
    std::vector<std::string> held;

    bool holds(std::string_view label) const;

    /// Holds the payload a and resource half A.
    static Party alice();
    /// Holds the resource half B.
    static Party bob();
};

using BellOutcome = BellKind;

/// Phi+ <-> 00, Phi- <-> 01, Psi+ <-> 10, Psi- <-> 11.
///
/// The first bit says whether B needs an X flip, the second whether it needs a
/// Z phase fix. The two-step protocol sends (A z-bit, a x-bit) in the same
/// positions, so its joint message decodes to the matching Bell outcome.
std::array<Bit, 2> encode_outcome(BellOutcome outcome);
BellOutcome decode_outcome(Bit flip, Bit phase);

struct ClassicalMessage {
    PartyName sender = PartyName::Alice;
    PartyName receiver = PartyName::Bob;
    std::vector<Bit> bits;
    std::string step_tag;

    bool operator==(const ClassicalMessage &) const = default;
};

enum class EventKind { Prepare, Gate, Measure, Message, Correction };

std::string to_string(EventKind k);

struct Event {
    EventKind kind = EventKind::Prepare;
    std::optional<PartyName> party;
    std::string step_tag;
    /// Gate names joined by '*', basis name, or a resource description.
    std::string operation;
    std::vector<std::string> labels;
    std::optional<Outcome> outcome;
    std::optional<ClassicalMessage> message;
};

/// Gates Bob applies for each outcome; swappable so tests can inject faults.
struct CorrectionTable {
    /// Indexed by BellOutcome; applied front first.
    std::array<std::vector<Gate>, 4> bell;
    /// Step 1 correction when A's z-bit is 1 (identity otherwise).
    Gate step1_flip;
    /// Step 2 correction when a's x-outcome is "-" (identity otherwise).
    Gate step2_phase;

    static CorrectionTable standard();
    /// Every X becomes Z and vice versa.
    CorrectionTable with_x_and_z_swapped() const;
};

/// Phi+ -> [I], Phi- -> [Z], Psi+ -> [X], Psi- -> [X, Z].
std::vector<Gate> correction_for(BellOutcome outcome);
Gate step1_correction(Bit a_resource_bit);
Gate step2_correction(Bit x_outcome_bit);

/// Phi+ on (A, B) as a StateVector, or 1/2 |00><00| + 1/2 |11><11| as a DensityMatrix.
QuantumState make_resource(ResourceKind kind);

class RunMode {
  public:
    enum class Kind { Enumerate, Sample };

    static RunMode enumerate() {
        return RunMode(Kind::Enumerate, 0);
    }
    static RunMode sample(std::uint64_t seed) {
        return RunMode(Kind::Sample, seed);
    }

    Kind kind() const noexcept {
        return kind_;
    }
    std::uint64_t seed() const noexcept {
        return seed_;
    }
    bool sampling() const noexcept {
        return kind_ == Kind::Sample;
    }

  private:
    RunMode(Kind k, std::uint64_t s) : kind_(k), seed_(s) {
    }
    Kind kind_;
    std::uint64_t seed_;
};

/// One branch (enumerate mode) or one realized run (sample mode).
struct Transcript {
    ProtocolId protocol = ProtocolId::Standard;
    BlochParams params;
    ResourceKind resource = ResourceKind::Entangled;
    std::optional<StopAfter> stop_after;
    double probability = 0.0;
    std::vector<Event> events;
    std::vector<ClassicalMessage> messages;
    /// Qubits still unmeasured at the end, with all corrections applied.
    QuantumState final_state;
    /// Same qubits with none of Bob's corrections applied.
    QuantumState uncorrected_state;
    /// Fidelity of Bob's reduced state with the payload.
    double fidelity = 0.0;

    std::vector<Bit> bits() const;
    /// Bell outcome the two sent bits decode to; empty unless two bits were sent.
    std::optional<BellOutcome> bell_equivalent() const;
    DensityMatrix final_b() const;
    DensityMatrix uncorrected_b() const;
    StateVector target() const;
};

/// Bell-measurement teleportation of bloch_state(params) from a to B.
std::vector<Transcript> run_standard(const BlochParams &params, const RunMode &mode,
                                     const CorrectionTable &table = CorrectionTable::standard());

/// CNOT + z-measurement of A (step 1), then x-measurement of a (step 2).
std::vector<Transcript> run_two_step(const BlochParams &params, ResourceKind resource, StopAfter stop_after,
                                     const RunMode &mode,
                                     const CorrectionTable &table = CorrectionTable::standard());

}  // namespace teleport
