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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "teleport/protocols.hpp"

namespace teleport::analysis {

/// theta = arccos(sqrt(f0)) in [0, pi/2]; f0 is clamped to [0, 1].
double estimate_theta(double frequency_zero);

/// sigmas * sqrt(p (1 - p) / shots).
double binomial_bound(double p, std::size_t shots, double sigmas = 3.0);

struct ReportEntry {
    std::string name;
    double observed = 0.0;
    double expected = 0.0;
    double bound = 0.0;

    double deviation() const;
    bool pass() const {
        return deviation() <= bound;
    }
};

/// Observed-vs-exact comparison of an ensemble of runs.
struct EnsembleReport {
    std::size_t shots = 0;
    std::vector<ReportEntry> entries;
    std::optional<double> theta_estimate;
    std::optional<double> theta_reference;

    double max_deviation() const;
    /// True iff every entry is within its bound.
    bool passed() const;
    const ReportEntry &entry(const std::string &name) const;
};

/// `shots` sampled runs; shot i uses seed shot_seed(seed, i).
std::vector<Transcript> sample_standard(const BlochParams &params, std::uint64_t seed, std::size_t shots);
std::vector<Transcript> sample_two_step(const BlochParams &params, ResourceKind resource, StopAfter stop_after,
                                        std::uint64_t seed, std::size_t shots);

/// Bob's local view after step 1: exact rho_B entries and sampled z statistics on B.
EnsembleReport bob_step1_report(const BlochParams &params, ResourceKind resource, std::uint64_t seed,
                                std::size_t shots);

struct PhiScan {
    /// Largest entry difference of corrected rho_B (and rho_a) against the first phi, over all branches.
    double max_deviation_b = 0.0;
    double max_deviation_a = 0.0;
    /// Worst fidelity of Bob's state with each phi's own payload.
    double min_fidelity = 1.0;
    /// Smallest trace distance between Bob's states for two different phi.
    double min_pairwise_distance = 0.0;
};

/// Requires at least two phi values.
PhiScan phi_scan(double theta, std::span<const double> phis, StopAfter stop_after,
                 ResourceKind resource = ResourceKind::Entangled);

/// Sampled outcome frequencies of both protocols against their exact distributions.
EnsembleReport cross_check(const BlochParams &params, std::uint64_t seed, std::size_t shots);

}  // namespace teleport::analysis
