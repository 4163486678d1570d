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

#include "teleport/json.hpp"

namespace teleport {

namespace {

json complex_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

json bits_json(std::span<const Bit> bits) {
    json out = json::array();
    for (Bit b : bits) {
        out.push_back(to_int(b));
    }
    return out;
}

}  // namespace

json to_json(const StateVector &state) {
    json amps = json::array();
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        amps.push_back(complex_json(state[i]));
    }
    return json{{"labels", state.reg().labels()},
                {"bit_order", kBitOrder},
                {"representation", "vector"},
                {"matrix_or_vector", std::move(amps)}};
}

json to_json(const DensityMatrix &rho) {
    json rows = json::array();
    for (std::size_t r = 0; r < rho.dimension(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rho.dimension(); ++c) {
            row.push_back(complex_json(rho(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"labels", rho.reg().labels()},
                {"bit_order", kBitOrder},
                {"representation", "matrix"},
                {"matrix_or_vector", std::move(rows)}};
}

json to_json(const QuantumState &state) {
    return std::visit([](const auto &s) { return to_json(s); }, state);
}

json to_json(const Event &event) {
    json e{{"kind", to_string(event.kind)}, {"step", event.step_tag}, {"operation", event.operation}};
    e["party"] = event.party ? json(to_string(*event.party)) : json(nullptr);
    e["labels"] = event.labels;
    if (event.outcome) {
        e["outcome"] = json{{"labels", event.outcome->labels},
                            {"basis", to_string(event.outcome->basis)},
                            {"index", event.outcome->index},
                            {"name", event.outcome->name}};
    }
    if (event.message) {
        e["message"] = json{{"sender", to_string(event.message->sender)},
                            {"receiver", to_string(event.message->receiver)},
                            {"bits", bits_json(event.message->bits)},
                            {"step", event.message->step_tag}};
    }
    return e;
}

json to_json(const Transcript &t) {
    json events = json::array();
    for (const auto &e : t.events) {
        events.push_back(to_json(e));
    }
    json out{{"probability", t.probability},
             {"bits", bits_json(t.bits())},
             {"fidelity", t.fidelity},
             {"events", std::move(events)},
             {"final_state", to_json(t.final_state)},
             {"uncorrected_state", to_json(t.uncorrected_state)}};
    if (auto bell = t.bell_equivalent()) {
        out["bell_outcome"] = to_string(*bell);
    }
    return out;
}

json to_json(const classical::OtpRow &row) {
    return json{{"probability", row.probability}, {"a", to_int(row.a)},
                {"A", to_int(row.key_alice)},     {"B", to_int(row.key_bob)},
                {"communicated", to_int(row.communicated)}, {"recovered", to_int(row.recovered)}};
}

json to_json(const classical::ClassicalTranscript &t) {
    return json{{"a", to_int(t.input)},
                {"A", to_int(t.key.alice)},
                {"B", to_int(t.key.bob)},
                {"communicated", to_int(t.communicated)},
                {"recovered", to_int(t.recovered)}};
}

json to_json(const classical::DelocalizationRow &row) {
    return json{{"probability", row.probability}, {"d", to_int(row.d)},
                {"x", to_int(row.x)},             {"y", to_int(row.y)},
                {"x_updated", to_int(row.x_updated)}, {"parity", to_int(row.parity)}};
}

json to_json(const classical::BiasEstimate &bias) {
    return json{{"count", bias.count}, {"frequency_zero", bias.frequency_zero}, {"standard_error", bias.standard_error}};
}

json to_json(const analysis::EnsembleReport &report) {
    json entries = json::array();
    for (const auto &e : report.entries) {
        entries.push_back(json{{"name", e.name},
                               {"observed", e.observed},
                               {"expected", e.expected},
                               {"bound", e.bound},
                               {"deviation", e.deviation()},
                               {"pass", e.pass()}});
    }
    json out{{"shots", report.shots},
             {"entries", std::move(entries)},
             {"max_deviation", report.max_deviation()},
             {"pass", report.passed()}};
    if (report.theta_estimate) {
        out["theta_estimate"] = *report.theta_estimate;
    }
    if (report.theta_reference) {
        out["theta_reference"] = *report.theta_reference;
    }
    return out;
}

json make_document(json config, json branches) {
    return json{{"schema_version", kSchemaVersion}, {"config", std::move(config)}, {"branches", std::move(branches)}};
}

namespace {

std::string state_problem(const json &s, const std::string &where) {
    if (!s.is_object() || !s.contains("labels") || !s.contains("representation") || !s.contains("matrix_or_vector")) {
        return where + ": state needs labels, representation and matrix_or_vector";
    }
    const auto &rep = s["representation"];
    if (rep != "vector" && rep != "matrix") {
        return where + ": unknown representation";
    }
    const std::size_t dim = std::size_t{1} << s["labels"].size();
    const auto &data = s["matrix_or_vector"];
    if (!data.is_array() || data.size() != dim) {
        return where + ": expected " + std::to_string(dim) + " entries";
    }
    auto is_complex = [](const json &c) { return c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number(); };
    for (const auto &row : data) {
        if (rep == "vector") {
            if (!is_complex(row)) {
                return where + ": amplitudes must be [re, im] pairs";
            }
        } else {
            if (!row.is_array() || row.size() != dim) {
                return where + ": matrix rows must have " + std::to_string(dim) + " entries";
            }
            for (const auto &c : row) {
                if (!is_complex(c)) {
                    return where + ": matrix entries must be [re, im] pairs";
                }
            }
        }
    }
    return {};
}

}  // namespace

std::string schema_problem(const json &doc) {
    if (!doc.is_object()) {
        return "document is not an object";
    }
    if (doc.value("schema_version", "") != kSchemaVersion) {
        return "missing or unknown schema_version";
    }
    if (!doc.contains("config") || !doc["config"].is_object()) {
        return "missing config object";
    }
    if (!doc.contains("branches") || !doc["branches"].is_array()) {
        return "missing branches array";
    }
    for (std::size_t i = 0; i < doc["branches"].size(); ++i) {
        const auto &b = doc["branches"][i];
        const std::string where = "branches[" + std::to_string(i) + "]";
        if (!b.is_object()) {
            return where + " is not an object";
        }
        if (b.contains("probability") && !b["probability"].is_number()) {
            return where + ": probability must be a number";
        }
        if (b.contains("final_state")) {
            if (!b.contains("events") || !b["events"].is_array()) {
                return where + ": quantum branches need an events array";
            }
            if (auto p = state_problem(b["final_state"], where + ".final_state"); !p.empty()) {
                return p;
            }
        }
    }
    return {};
}

std::string dump(const json &doc) {
    return doc.dump() + "\n";
}

}  // namespace teleport
