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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace teleport::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string protocol;
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<std::string> resource;
    std::optional<std::string> stop_after;
    std::string mode = "enumerate";
    std::optional<std::size_t> shots;
    std::uint64_t seed = 1;
    std::optional<double> p;
    std::string format = "json";
    std::optional<std::string> output;
};

/// Returns an empty string if the combination of flags is valid.
std::string validate(const RunConfig &config);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace teleport::cli
