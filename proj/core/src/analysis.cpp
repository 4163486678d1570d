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

#include "teleport/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "teleport/measurement.hpp"
#include "teleport/metrics.hpp"
#include "teleport/rng.hpp"

namespace teleport::analysis {

double estimate_theta(double frequency_zero) {
    return std::acos(std::sqrt(std::clamp(frequency_zero, 0.0, 1.0)));
}

double binomial_bound(double p, std::size_t shots, double sigmas) {
    return sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
}

double ReportEntry::deviation() const {
    return std::abs(observed - expected);
}

double EnsembleReport::max_deviation() const {
    double m = 0.0;
    for (const auto &e : entries) {
        m = std::max(m, e.deviation());
    }
    return m;
}

bool EnsembleReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry &e) { return e.pass(); });
}

const ReportEntry &EnsembleReport::entry(const std::string &name) const {
    for (const auto &e : entries) {
        if (e.name == name) {
            return e;
        }
    }
    throw std::out_of_range("no report entry named '" + name + "'");
}

std::vector<Transcript> sample_standard(const BlochParams &params, std::uint64_t seed, std::size_t shots) {
    std::vector<Transcript> out;
    out.reserve(shots);
    for (std::size_t i = 0; i < shots; ++i) {
        out.push_back(std::move(run_standard(params, RunMode::sample(shot_seed(seed, i))).front()));
    }
    return out;
}

std::vector<Transcript> sample_two_step(const BlochParams &params, ResourceKind resource, StopAfter stop_after,
                                        std::uint64_t seed, std::size_t shots) {
    std::vector<Transcript> out;
    out.reserve(shots);
    for (std::size_t i = 0; i < shots; ++i) {
        out.push_back(std::move(run_two_step(params, resource, stop_after, RunMode::sample(shot_seed(seed, i))).front()));
    }
    return out;
}

EnsembleReport bob_step1_report(const BlochParams &params, ResourceKind resource, std::uint64_t seed,
                                std::size_t shots) {
    if (shots == 0) {
        throw DomainError("bob_step1_report needs at least one shot");
    }
    const double c2 = std::pow(std::cos(params.theta), 2);
    const double s2 = std::pow(std::sin(params.theta), 2);

    EnsembleReport report;
    report.shots = shots;

    auto exact = run_two_step(params, resource, StopAfter::Step1, RunMode::enumerate());
    std::vector<std::pair<double, DensityMatrix>> parts;
    for (const auto &t : exact) {
        parts.emplace_back(t.probability, t.final_b());
    }
    DensityMatrix rho_b = mix(parts);
    report.entries.push_back({"rho_B[0][0]", rho_b(0, 0).real(), c2, kTolerance});
    report.entries.push_back({"rho_B[1][1]", rho_b(1, 1).real(), s2, kTolerance});
    report.entries.push_back({"|rho_B[0][1]|", std::abs(rho_b(0, 1)), 0.0, kTolerance});

    std::size_t zeros = 0;
    auto runs = sample_two_step(params, resource, StopAfter::Step1, seed, shots);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        Rng rng = Rng::derive(shot_seed(seed, i), 1);
        auto b = measure_sample(runs[i].final_b(), MeasurementBasis::z(), std::vector<std::string>{"B"}, rng);
        zeros += b.outcomes.front().index == 0 ? 1 : 0;
    }
    const double f0 = static_cast<double>(zeros) / static_cast<double>(shots);
    report.entries.push_back({"P(B=0)", f0, c2, binomial_bound(c2, shots)});
    report.theta_estimate = estimate_theta(f0);
    report.theta_reference = params.theta;
    return report;
}

PhiScan phi_scan(double theta, std::span<const double> phis, StopAfter stop_after, ResourceKind resource) {
    if (phis.size() < 2) {
        throw DomainError("phi_scan needs at least two phi values");
    }
    PhiScan scan;
    scan.min_pairwise_distance = std::numeric_limits<double>::infinity();
    std::vector<std::vector<Transcript>> runs;
    for (double phi : phis) {
        BlochParams params{theta, phi};
        runs.push_back(run_two_step(params, resource, stop_after, RunMode::enumerate()));
        for (const auto &t : runs.back()) {
            scan.min_fidelity = std::min(scan.min_fidelity, t.fidelity);
        }
    }
    const auto &ref = runs.front();
    for (std::size_t k = 1; k < runs.size(); ++k) {
        if (runs[k].size() != ref.size()) {
            throw std::logic_error("phi_scan: branch structure changed with phi");
        }
        for (std::size_t b = 0; b < ref.size(); ++b) {
            scan.max_deviation_b = std::max(scan.max_deviation_b, max_abs_diff(runs[k][b].final_b(), ref[b].final_b()));
            if (stop_after == StopAfter::Step1) {
                auto rho_a = partial_trace(to_density(runs[k][b].final_state), {"a"});
                auto ref_a = partial_trace(to_density(ref[b].final_state), {"a"});
                scan.max_deviation_a = std::max(scan.max_deviation_a, max_abs_diff(rho_a, ref_a));
            }
        }
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            for (std::size_t b = 0; b < ref.size(); ++b) {
                scan.min_pairwise_distance =
                    std::min(scan.min_pairwise_distance, trace_distance(runs[i][b].final_b(), runs[j][b].final_b()));
            }
        }
    }
    return scan;
}

EnsembleReport cross_check(const BlochParams &params, std::uint64_t seed, std::size_t shots) {
    if (shots == 0) {
        throw DomainError("cross_check needs at least one shot");
    }
    EnsembleReport report;
    report.shots = shots;

    std::array<double, 4> exact_standard{};
    for (const auto &t : run_standard(params, RunMode::enumerate())) {
        exact_standard[static_cast<std::size_t>(*t.bell_equivalent())] += t.probability;
    }
    std::array<double, 4> exact_two_step{};
    for (const auto &t : run_two_step(params, ResourceKind::Entangled, StopAfter::Step2, RunMode::enumerate())) {
        exact_two_step[static_cast<std::size_t>(*t.bell_equivalent())] += t.probability;
    }

    std::array<std::size_t, 4> standard_counts{};
    for (const auto &t : sample_standard(params, seed, shots)) {
        ++standard_counts[static_cast<std::size_t>(*t.bell_equivalent())];
    }
    std::array<std::size_t, 4> two_step_counts{};
    std::size_t step1_zero = 0;
    for (const auto &t : sample_two_step(params, ResourceKind::Entangled, StopAfter::Step2, seed + 1, shots)) {
        ++two_step_counts[static_cast<std::size_t>(*t.bell_equivalent())];
        step1_zero += t.bits().front() == Bit::Zero ? 1 : 0;
    }

    const auto n = static_cast<double>(shots);
    for (std::size_t k = 0; k < 4; ++k) {
        const std::string label = to_string(static_cast<BellOutcome>(k));
        report.entries.push_back({"standard exact P(" + label + ")", exact_standard[k], 0.25, kTolerance});
        report.entries.push_back({"two-step exact P(" + label + ")", exact_two_step[k], 0.25, kTolerance});
        report.entries.push_back({"standard sampled P(" + label + ")", static_cast<double>(standard_counts[k]) / n,
                                  0.25, binomial_bound(0.25, shots)});
        report.entries.push_back({"two-step sampled P(" + label + ")", static_cast<double>(two_step_counts[k]) / n,
                                  0.25, binomial_bound(0.25, shots)});
    }
    report.entries.push_back(
        {"two-step sampled P(A=0)", static_cast<double>(step1_zero) / n, 0.5, binomial_bound(0.5, shots)});
    return report;
}

}  // namespace teleport::analysis
