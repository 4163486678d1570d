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

#include <nlohmann/json.hpp>

#include "teleport/analysis.hpp"
#include "teleport/classical.hpp"
#include "teleport/protocols.hpp"

namespace teleport {

using json = nlohmann::json;

/// Embedded in every emitted document as "schema_version".
inline constexpr const char *kSchemaVersion = "teleport-sim/transcript/1";

/// Label order convention written next to every serialized state.
inline constexpr const char *kBitOrder = "first label is the most significant bit";

// Complex numbers are [re, im] pairs; matrices are row-major arrays of rows.
json to_json(const StateVector &state);
json to_json(const DensityMatrix &rho);
json to_json(const QuantumState &state);
json to_json(const Event &event);
json to_json(const Transcript &transcript);
json to_json(const classical::OtpRow &row);
json to_json(const classical::ClassicalTranscript &transcript);
json to_json(const classical::DelocalizationRow &row);
json to_json(const classical::BiasEstimate &bias);
json to_json(const analysis::EnsembleReport &report);

/// {schema_version, config, branches}.
json make_document(json config, json branches);

/// Returns an empty string if `doc` matches the schema, else the first problem found.
std::string schema_problem(const json &doc);

/// Compact serialization with a trailing newline; identical input gives identical bytes.
std::string dump(const json &doc);

}  // namespace teleport
