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
#include <string>
#include <vector>

#include "teleport/json.hpp"
#include "teleport/protocols.hpp"

namespace teleport {

enum class Suite { All, Quantum, Classical };

struct VerifyOptions {
    Suite suite = Suite::All;
    std::uint64_t seed = 20070101;
    /// Replaced only by fault-injection tests.
    CorrectionTable corrections = CorrectionTable::standard();
};

/// One invariant: passes iff measured <= bound.
struct Check {
    std::string name;
    std::string suite;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool passed() const;
    const Check *find(const std::string &name) const;
};

VerifyReport run_verification(const VerifyOptions &options);

json to_json(const VerifyReport &report);

}  // namespace teleport
