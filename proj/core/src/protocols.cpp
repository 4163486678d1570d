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

#include "teleport/protocols.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "teleport/metrics.hpp"
#include "teleport/rng.hpp"

namespace teleport {

std::string to_string(PartyName p) {
    return p == PartyName::Alice ? "Alice" : "Bob";
}

std::string to_string(ResourceKind r) {
    return r == ResourceKind::Entangled ? "entangled" : "classical";
}

std::string to_string(StopAfter s) {
    return s == StopAfter::Step1 ? "step1" : "step2";
}

std::string to_string(ProtocolId p) {
    return p == ProtocolId::Standard ? "standard" : "two-step";
}

std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::Prepare:
            return "prepare";
        case EventKind::Gate:
            return "gate";
        case EventKind::Measure:
            return "measure";
        case EventKind::Message:
            return "message";
        case EventKind::Correction:
            return "correction";
    }
    return "?";
}

bool Party::holds(std::string_view label) const {
    return std::find(held.begin(), held.end(), label) != held.end();
}

Party Party::alice() {
    return Party{PartyName::Alice, {"a", "A"}};
}

Party Party::bob() {
    return Party{PartyName::Bob, {"B"}};
}

std::array<Bit, 2> encode_outcome(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PhiPlus:
            return {Bit::Zero, Bit::Zero};
        case BellOutcome::PhiMinus:
            return {Bit::Zero, Bit::One};
        case BellOutcome::PsiPlus:
            return {Bit::One, Bit::Zero};
        case BellOutcome::PsiMinus:
            return {Bit::One, Bit::One};
    }
    throw std::logic_error("unreachable");
}

BellOutcome decode_outcome(Bit flip, Bit phase) {
    static constexpr BellOutcome table[2][2] = {{BellOutcome::PhiPlus, BellOutcome::PhiMinus},
                                                {BellOutcome::PsiPlus, BellOutcome::PsiMinus}};
    return table[to_int(flip)][to_int(phase)];
}

CorrectionTable CorrectionTable::standard() {
    using namespace gates;
    return CorrectionTable{{{{identity()}, {pauli_z()}, {pauli_x()}, {pauli_x(), pauli_z()}}}, pauli_x(), pauli_z()};
}

CorrectionTable CorrectionTable::with_x_and_z_swapped() const {
    auto swap = [](const Gate &g) {
        if (g == gates::pauli_x()) {
            return gates::pauli_z();
        }
        if (g == gates::pauli_z()) {
            return gates::pauli_x();
        }
        return g;
    };
    CorrectionTable out = *this;
    for (auto &seq : out.bell) {
        for (auto &g : seq) {
            g = swap(g);
        }
    }
    out.step1_flip = swap(step1_flip);
    out.step2_phase = swap(step2_phase);
    return out;
}

std::vector<Gate> correction_for(BellOutcome outcome) {
    return CorrectionTable::standard().bell[static_cast<std::size_t>(outcome)];
}

Gate step1_correction(Bit a_resource_bit) {
    return a_resource_bit == Bit::One ? CorrectionTable::standard().step1_flip : gates::identity();
}

Gate step2_correction(Bit x_outcome_bit) {
    return x_outcome_bit == Bit::One ? CorrectionTable::standard().step2_phase : gates::identity();
}

QuantumState make_resource(ResourceKind kind) {
    if (kind == ResourceKind::Entangled) {
        return bell_state(BellKind::PhiPlus, "A", "B");
    }
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityMatrix(Register{"A", "B"}, m);
}

std::vector<Bit> Transcript::bits() const {
    std::vector<Bit> out;
    for (const auto &m : messages) {
        out.insert(out.end(), m.bits.begin(), m.bits.end());
    }
    return out;
}

std::optional<BellOutcome> Transcript::bell_equivalent() const {
    auto b = bits();
    if (b.size() != 2) {
        return std::nullopt;
    }
    return decode_outcome(b[0], b[1]);
}

DensityMatrix Transcript::final_b() const {
    return partial_trace(to_density(final_state), {"B"});
}

DensityMatrix Transcript::uncorrected_b() const {
    return partial_trace(to_density(uncorrected_state), {"B"});
}

StateVector Transcript::target() const {
    return bloch_state(params, "B");
}

namespace {

// Alice's and Bob's joint laboratory during one protocol execution.
//
// Every run carries the corrected state and a shadow copy that never receives
// Bob's corrections. In enumerate mode each measurement fans runs out into
// all branches; in sample mode one branch is kept.
class Lab {
  public:
    struct Run {
        double probability = 1.0;
        QuantumState state;
        QuantumState raw;
        std::vector<Event> events;
        std::vector<ClassicalMessage> delivered;
        std::vector<Outcome> outcomes;
    };

    Lab(QuantumState initial, const RunMode &mode) {
        if (mode.sampling()) {
            rng_.emplace(mode.seed());
        }
        runs_.push_back(Run{1.0, initial, initial, {}, {}, {}});
    }

    void note_prepare(std::string operation, std::vector<std::string> labels, std::optional<PartyName> party) {
        for (auto &r : runs_) {
            r.events.push_back(Event{EventKind::Prepare, party, "setup", operation, labels, {}, {}});
        }
    }

    void gate(const Party &party, const Gate &g, std::vector<std::string> targets, const std::string &tag) {
        require_held(party, targets);
        for (auto &r : runs_) {
            r.state = apply_gate(r.state, g, targets);
            r.raw = apply_gate(r.raw, g, targets);
            r.events.push_back(Event{EventKind::Gate, party.name, tag, g.name(), targets, {}, {}});
        }
    }

    void measure(const Party &party, const MeasurementBasis &basis, std::vector<std::string> targets,
                 const std::string &tag) {
        require_held(party, targets);
        std::vector<Run> next;
        for (auto &r : runs_) {
            auto branches = teleport::measure(r.state, basis, targets);
            auto raw_branches = teleport::measure(r.raw, basis, targets);
            if (rng_) {
                auto chosen = sample(branches, *rng_);
                branches.branches = {std::move(chosen)};
            }
            for (auto &b : branches.branches) {
                const Outcome &o = b.outcomes.front();
                auto raw = std::find_if(raw_branches.branches.begin(), raw_branches.branches.end(),
                                        [&](const auto &rb) { return rb.outcomes.front().index == o.index; });
                if (raw == raw_branches.branches.end()) {
                    throw std::logic_error("corrected and uncorrected runs disagree on possible outcomes");
                }
                Run child{r.probability * b.probability, b.post_state, raw->post_state, r.events, r.delivered,
                          r.outcomes};
                child.outcomes.push_back(o);
                child.events.push_back(Event{EventKind::Measure, party.name, tag, to_string(basis.kind()), targets, o, {}});
                next.push_back(std::move(child));
            }
        }
        runs_ = std::move(next);
    }

    void send(const Party &from, const Party &to, const std::function<std::vector<Bit>(const Run &)> &encode,
              const std::string &tag) {
        for (auto &r : runs_) {
            ClassicalMessage msg{from.name, to.name, encode(r), tag};
            r.delivered.push_back(msg);
            r.events.push_back(Event{EventKind::Message, from.name, tag, "send", {}, {}, msg});
        }
    }

    void correct(const Party &party, const std::function<std::vector<Gate>(const ClassicalMessage &)> &decide,
                 const std::string &target, const std::string &tag) {
        require_held(party, {target});
        for (auto &r : runs_) {
            auto msg = std::find_if(r.delivered.begin(), r.delivered.end(), [&](const ClassicalMessage &m) {
                return m.step_tag == tag && m.receiver == party.name;
            });
            if (msg == r.delivered.end()) {
                throw std::logic_error("correction for '" + tag + "' attempted before its message arrived");
            }
            auto seq = decide(*msg);
            r.state = apply_sequence(r.state, seq, target);
            std::string name;
            for (const auto &g : seq) {
                name += name.empty() ? g.name() : "*" + g.name();
            }
            r.events.push_back(Event{EventKind::Correction, party.name, tag, name.empty() ? "I" : name, {target}, {}, {}});
        }
    }

    const std::vector<Run> &runs() const {
        return runs_;
    }

  private:
    static void require_held(const Party &party, const std::vector<std::string> &labels) {
        for (const auto &l : labels) {
            if (!party.holds(l)) {
                throw std::logic_error(to_string(party.name) + " does not hold qubit '" + l + "'");
            }
        }
    }

    std::optional<Rng> rng_;
    std::vector<Run> runs_;
};

Bit last_outcome_bit(const Lab::Run &r) {
    return to_bit(r.outcomes.back().index == 1);
}

std::vector<Transcript> finish(const Lab &lab, ProtocolId id, const BlochParams &params, ResourceKind resource,
                               std::optional<StopAfter> stop_after) {
    StateVector target = bloch_state(params, "B");
    std::vector<Transcript> out;
    for (const auto &r : lab.runs()) {
        Transcript t{.protocol = id,
                     .params = params,
                     .resource = resource,
                     .stop_after = stop_after,
                     .probability = r.probability,
                     .events = r.events,
                     .messages = r.delivered,
                     .final_state = r.state,
                     .uncorrected_state = r.raw};
        t.fidelity = fidelity(t.final_b(), target);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::vector<Transcript> run_standard(const BlochParams &params, const RunMode &mode, const CorrectionTable &table) {
    params.validate();
    const Party alice = Party::alice();
    const Party bob = Party::bob();

    Lab lab(tensor(bloch_state(params, "a"), bell_state(BellKind::PhiPlus, "A", "B")), mode);
    lab.note_prepare("payload", {"a"}, PartyName::Alice);
    lab.note_prepare("resource Phi+", {"A", "B"}, std::nullopt);

    lab.measure(alice, MeasurementBasis::bell(), {"a", "A"}, "bell");
    lab.send(
        alice, bob,
        [](const Lab::Run &r) {
            auto bits = encode_outcome(static_cast<BellOutcome>(r.outcomes.back().index));
            return std::vector<Bit>(bits.begin(), bits.end());
        },
        "bell");
    lab.correct(
        bob,
        [&](const ClassicalMessage &m) { return table.bell[static_cast<std::size_t>(decode_outcome(m.bits[0], m.bits[1]))]; },
        "B", "bell");
    return finish(lab, ProtocolId::Standard, params, ResourceKind::Entangled, std::nullopt);
}

std::vector<Transcript> run_two_step(const BlochParams &params, ResourceKind resource, StopAfter stop_after,
                                     const RunMode &mode, const CorrectionTable &table) {
    params.validate();
    const Party alice = Party::alice();
    const Party bob = Party::bob();

    QuantumState initial = resource == ResourceKind::Entangled
                               ? QuantumState(tensor(bloch_state(params, "a"), bell_state(BellKind::PhiPlus, "A", "B")))
                               : QuantumState(tensor(density_from(bloch_state(params, "a")),
                                                     std::get<DensityMatrix>(make_resource(resource))));
    Lab lab(std::move(initial), mode);
    lab.note_prepare("payload", {"a"}, PartyName::Alice);
    lab.note_prepare(resource == ResourceKind::Entangled ? "resource Phi+" : "resource classical-correlated",
                     {"A", "B"}, std::nullopt);

    lab.gate(alice, gates::cnot(), {"a", "A"}, "step1");
    lab.measure(alice, MeasurementBasis::z(), {"A"}, "step1");
    lab.send(alice, bob, [](const Lab::Run &r) { return std::vector<Bit>{last_outcome_bit(r)}; }, "step1");
    lab.correct(
        bob,
        [&](const ClassicalMessage &m) {
            return std::vector<Gate>{m.bits[0] == Bit::One ? table.step1_flip : gates::identity()};
        },
        "B", "step1");

    if (stop_after == StopAfter::Step2) {
        lab.measure(alice, MeasurementBasis::x(), {"a"}, "step2");
        lab.send(alice, bob, [](const Lab::Run &r) { return std::vector<Bit>{last_outcome_bit(r)}; }, "step2");
        lab.correct(
            bob,
            [&](const ClassicalMessage &m) {
                return std::vector<Gate>{m.bits[0] == Bit::One ? table.step2_phase : gates::identity()};
            },
            "B", "step2");
    }
    return finish(lab, ProtocolId::TwoStep, params, resource, stop_after);
}

}  // namespace teleport
