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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "teleport/analysis.hpp"
#include "teleport/classical.hpp"
#include "teleport/metrics.hpp"
#include "teleport/protocols.hpp"
#include "teleport/rng.hpp"

using namespace teleport;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20070101;

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Tracks the worst observed deviation against one tolerance.
struct Worst {
    double value = 0.0;
    void add(double v) {
        value = std::isnan(v) ? INFINITY : std::max(value, v);
    }
};

std::string fmt(const char *format, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), format, a, b);
    return buf;
}

std::vector<BlochParams> random_params(std::size_t n, std::uint64_t stream) {
    Rng rng = Rng::derive(kSeed, stream);
    std::vector<BlochParams> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({rng.uniform() * kPi / 2, rng.uniform() * 2 * kPi});
    }
    return out;
}

oracle::Mat2 to_mat2(const DensityMatrix &rho) {
    oracle::Mat2 m{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m[i][j] = rho.matrix()(i, j);
        }
    }
    return m;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int bell_index(const Transcript &t) {
    return static_cast<int>(*t.bell_equivalent());
}

Verdict bell_branch_uniformity() {
    auto start = std::chrono::steady_clock::now();
    Worst dev;
    bool structure = true;
    for (const auto &p : random_params(100, 1)) {
        auto runs = run_standard(p, RunMode::enumerate());
        structure = structure && runs.size() == 4;
        auto psi = oracle::payload(p.theta, p.phi);
        auto initial = oracle::standard_initial(psi);
        for (const auto &t : runs) {
            dev.add(std::abs(t.probability - 0.25));
            dev.add(std::abs(t.probability - oracle::bell_project(initial, bell_index(t)).probability));
        }
    }
    double secs = elapsed_seconds(start);
    Verdict o;
    o.pass = structure && dev.value <= 1e-12 && secs < 1.0;
    o.detail = fmt("100 parameter sets, 4 branches each, max |P - 1/4| = %.2e (tol 1e-12), %.3f s (limit 1 s)",
                   dev.value, secs);
    return o;
}

Verdict teleportation_correctness() {
    Worst dev;
    for (const auto &p : random_params(1000, 2)) {
        auto psi = oracle::payload(p.theta, p.phi);
        auto check = [&](const std::vector<Transcript> &runs) {
            for (const auto &t : runs) {
                dev.add(std::abs(t.fidelity - 1.0));
                dev.add(std::abs(oracle::expectation(to_mat2(t.final_b()), psi) - 1.0));
            }
        };
        check(run_standard(p, RunMode::enumerate()));
        check(run_two_step(p, ResourceKind::Entangled, StopAfter::Step2, RunMode::enumerate()));
    }
    Verdict o;
    o.pass = dev.value <= 1e-12;
    o.detail = fmt("1000 parameter sets, standard and two-step, max |F - 1| = %.2e (tol %.0e)", dev.value, 1e-12);
    return o;
}

Verdict step1_marginal() {
    auto start = std::chrono::steady_clock::now();
    Worst dev;
    for (int k = 0; k < 50; ++k) {
        double theta = (kPi / 2) * k / 49.0;
        double c2 = std::pow(std::cos(theta), 2);
        double s2 = std::pow(std::sin(theta), 2);
        for (auto res : {ResourceKind::Entangled, ResourceKind::ClassicalCorrelated}) {
            for (const auto &t : run_two_step({theta, 1.3}, res, StopAfter::Step1, RunMode::enumerate())) {
                const Matrix m = t.final_b().matrix();
                dev.add(std::abs(m(0, 0) - c2));
                dev.add(std::abs(m(1, 1) - s2));
                dev.add(std::abs(m(0, 1)));
                dev.add(std::abs(m(1, 0)));
            }
        }
    }
    double secs = elapsed_seconds(start);
    Verdict o;
    o.pass = dev.value <= 1e-12 && secs < 1.0;
    o.detail = fmt("50-point theta grid, both resources, max |rho_B - diag(c^2, s^2)| = %.2e (tol 1e-12), %.3f s",
                   dev.value, secs);
    return o;
}

Verdict phi_delocalization() {
    const double phis[] = {0.0, 1.0, 2.0, 3.0, kPi / 2, kPi};
    Worst dev;
    for (double theta : {0.0, 0.4, kPi / 4, 1.1, kPi / 2}) {
        for (auto res : {ResourceKind::Entangled, ResourceKind::ClassicalCorrelated}) {
            auto ref = run_two_step({theta, phis[0]}, res, StopAfter::Step1, RunMode::enumerate());
            for (double phi : phis) {
                auto runs = run_two_step({theta, phi}, res, StopAfter::Step1, RunMode::enumerate());
                if (runs.size() != ref.size()) {
                    dev.add(INFINITY);
                    continue;
                }
                for (std::size_t b = 0; b < runs.size(); ++b) {
                    auto rho = to_density(runs[b].final_state);
                    auto rho_ref = to_density(ref[b].final_state);
                    dev.add(max_abs_diff(partial_trace(rho, {"B"}), partial_trace(rho_ref, {"B"})));
                    dev.add(max_abs_diff(partial_trace(rho, {"a"}), partial_trace(rho_ref, {"a"})));
                }
            }
        }
    }
    Verdict o;
    o.pass = dev.value < 1e-12;
    o.detail = fmt("phi in {0, 1, 2, 3, pi/2, pi}, max reduced-matrix difference = %.2e (tol %.0e)", dev.value, 1e-12);
    return o;
}

Verdict classical_resource_step2() {
    Worst dev;
    double at_quarter = 0.0;
    for (int k = 0; k < 50; ++k) {
        double theta = (kPi / 2) * k / 49.0;
        double expected = std::pow(std::cos(theta), 4) + std::pow(std::sin(theta), 4);
        for (double phi : {0.0, 0.9, 2.5, 5.0}) {
            auto psi = oracle::payload(theta, phi);
            auto oracle_rho = oracle::classical_resource_final_rho(theta, phi);
            double oracle_f = oracle::expectation(oracle_rho, psi);
            dev.add(std::abs(oracle_f - expected));
            oracle::Mat2 lib_rho{};
            for (const auto &t :
                 run_two_step({theta, phi}, ResourceKind::ClassicalCorrelated, StopAfter::Step2, RunMode::enumerate())) {
                dev.add(std::abs(t.fidelity - oracle_f));
                auto m = to_mat2(t.final_b());
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        lib_rho[i][j] += t.probability * m[i][j];
                    }
                }
            }
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    dev.add(std::abs(lib_rho[i][j] - oracle_rho[i][j]));
                }
            }
        }
    }
    for (const auto &t :
         run_two_step({kPi / 4, 1.0}, ResourceKind::ClassicalCorrelated, StopAfter::Step2, RunMode::enumerate())) {
        at_quarter = std::max(at_quarter, std::abs(t.fidelity - 0.5));
    }
    Verdict o;
    o.pass = dev.value <= 1e-12 && at_quarter <= 1e-12;
    o.detail = fmt("max |F - (cos^4 + sin^4)| vs density-matrix oracle = %.2e, |F(pi/4) - 1/2| = %.2e (tol 1e-12)",
                   dev.value, at_quarter);
    return o;
}

// Coefficient matrix of the (a, B) pair after CNOT a->A and z-measurement of A with outcome r.
oracle::Mat2 step1_pair(double theta, double phi, int r) {
    auto initial = oracle::standard_initial(oracle::payload(theta, phi));
    oracle::Mat2 m{};
    for (int i = 0; i < 8; ++i) {
        int a = (i >> 2) & 1, A = (i >> 1) & 1, B = i & 1;
        if ((A ^ a) == r) {
            m[a][B] += initial[i];
        }
    }
    double n = 0.0;
    for (const auto &row : m) {
        for (auto v : row) {
            n += std::norm(v);
        }
    }
    for (auto &row : m) {
        for (auto &v : row) {
            v /= std::sqrt(n);
        }
    }
    return m;
}

Verdict entanglement_swap() {
    Worst dev;
    double before = concurrence(to_density(make_resource(ResourceKind::Entangled)));
    double phi_plus_oracle = oracle::schmidt_concurrence({{{oracle::kH, 0}, {0, oracle::kH}}});
    dev.add(std::abs(before - 1.0));
    dev.add(std::abs(phi_plus_oracle - 1.0));
    double classical_worst = concurrence(to_density(make_resource(ResourceKind::ClassicalCorrelated)));
    for (int k = 0; k < 50; ++k) {
        double theta = (kPi / 2) * k / 49.0;
        double expected = std::abs(std::sin(2 * theta));
        auto runs = run_two_step({theta, 0.7}, ResourceKind::Entangled, StopAfter::Step1, RunMode::enumerate());
        for (const auto &t : runs) {
            int r = to_int(t.bits().at(0));
            dev.add(std::abs(concurrence(to_density(t.final_state)) - expected));
            dev.add(std::abs(oracle::schmidt_concurrence(step1_pair(theta, 0.7, r)) - expected));
        }
        for (const auto &t :
             run_two_step({theta, 0.7}, ResourceKind::ClassicalCorrelated, StopAfter::Step1, RunMode::enumerate())) {
            classical_worst = std::max(classical_worst, concurrence(to_density(t.final_state)));
        }
    }
    Verdict o;
    o.pass = dev.value <= 1e-9 && classical_worst <= 1e-9;
    o.detail = fmt("entangled: max |C - expected| = %.2e; classical resource: max C = %.2e (tol 1e-9)", dev.value,
                   classical_worst);
    return o;
}

Verdict otp_exactness() {
    bool rows_ok = true;
    Worst dev;
    for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        auto rows = classical::otp_truth_table(p);
        int r = 0;
        double joint[2][2] = {};
        for (int a = 0; a < 2; ++a) {
            for (int k = 0; k < 2; ++k, ++r) {
                int c = a ^ k;
                double w = (a == 0 ? p : 1 - p) * 0.5;
                joint[a][c] += w;
                const auto &row = rows[r];
                rows_ok = rows_ok && to_int(row.a) == a && to_int(row.key_alice) == k && to_int(row.key_bob) == k &&
                          to_int(row.communicated) == c && to_int(row.recovered) == a && row.recovered == row.a;
                dev.add(std::abs(row.probability - w));
            }
        }
        auto d = classical::otp_distribution(p);
        dev.add(std::abs(d.communicated[0] - 0.5));
        dev.add(std::abs(d.communicated[1] - 0.5));
        for (int a = 0; a < 2; ++a) {
            for (int c = 0; c < 2; ++c) {
                dev.add(std::abs(d.joint[a][c] - joint[a][c]));
                dev.add(std::abs(d.joint[a][c] - d.input[a] * d.communicated[c]));
            }
            dev.add(std::abs(d.recovered[a] - d.input[a]));
        }
    }
    Verdict o;
    o.pass = rows_ok && dev.value <= 1e-15;
    o.detail = std::string("p in {0, 0.1, 0.5, 0.9, 1}: table rows ") + (rows_ok ? "match" : "DIFFER") +
               fmt(", max distribution error = %.2e (tol %.0e)", dev.value, 1e-15);
    return o;
}

Verdict delocalization_exactness() {
    bool rows_ok = true;
    Worst dev;
    for (int i = 0; i <= 100; ++i) {
        double p = i / 100.0;
        auto rows = classical::delocalization_table(p);
        int r = 0;
        for (int d = 0; d < 2; ++d) {
            for (int x = 0; x < 2; ++x, ++r) {
                const auto &row = rows[r];
                rows_ok = rows_ok && to_int(row.d) == d && to_int(row.x) == x && to_int(row.y) == x &&
                          to_int(row.x_updated) == (d ^ x) && to_int(row.parity) == d;
            }
        }
        dev.add(std::abs(classical::prob_updated_zero(p) - 0.5));
    }
    bool identity = true;
    for (Bit d : kBits) {
        for (Bit x : kBits) {
            identity = identity && classical::localize(classical::delocalize(d, x), x) == d;
        }
    }
    Verdict o;
    o.pass = rows_ok && identity && dev.value <= 1e-15;
    o.detail = std::string("truth table ") + (rows_ok ? "matches" : "DIFFERS") + ", localize(delocalize) " +
               (identity ? "is identity" : "is NOT identity") +
               fmt(", max |P(x~=0) - 1/2| = %.2e over 101 p values (tol %.0e)", dev.value, 1e-15);
    return o;
}

Verdict statistical_consistency() {
    const std::size_t shots = 10000;
    auto start = std::chrono::steady_clock::now();
    std::vector<analysis::ReportEntry> entries;
    BlochParams params{kPi / 3, 1.1};
    for (const auto &e : analysis::cross_check(params, kSeed, shots).entries) {
        entries.push_back(e);
    }
    for (auto res : {ResourceKind::Entangled, ResourceKind::ClassicalCorrelated}) {
        for (const auto &e : analysis::bob_step1_report(params, res, kSeed + 2, shots).entries) {
            entries.push_back(e);
        }
        std::array<std::size_t, 4> counts{};
        for (const auto &t : analysis::sample_two_step(params, res, StopAfter::Step2, kSeed + 3, shots)) {
            counts[static_cast<std::size_t>(bell_index(t))]++;
        }
        for (std::size_t k = 0; k < 4; ++k) {
            entries.push_back({"two-step step2 bits", static_cast<double>(counts[k]) / shots, 0.25,
                               analysis::binomial_bound(0.25, shots)});
        }
    }
    for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        classical::BitSource src(p, shot_seed(kSeed, 10));
        auto key = classical::SharedKey::generate(shots, shot_seed(kSeed, 11));
        auto run = classical::run_otp(src, key, shots);
        entries.push_back({"otp input", run.input_bias.frequency_zero, p, analysis::binomial_bound(p, shots)});
        entries.push_back({"otp communicated", run.communicated_bias.frequency_zero, 0.5,
                           analysis::binomial_bound(0.5, shots)});
        entries.push_back({"otp recovered", run.recovered_bias.frequency_zero, p, analysis::binomial_bound(p, shots)});

        classical::BitSource dsrc(p, shot_seed(kSeed, 12));
        auto dkey = classical::SharedKey::generate(shots, shot_seed(kSeed, 13));
        std::size_t d0 = 0, x0 = 0;
        for (const auto &row : classical::run_delocalize(dsrc, dkey, shots)) {
            d0 += row.d == Bit::Zero;
            x0 += row.x_updated == Bit::Zero;
        }
        entries.push_back({"delocalize d", static_cast<double>(d0) / shots, p, analysis::binomial_bound(p, shots)});
        entries.push_back(
            {"delocalize x~", static_cast<double>(x0) / shots, 0.5, analysis::binomial_bound(0.5, shots)});
    }
    double secs = elapsed_seconds(start);
    std::size_t failed = 0;
    double worst_ratio = 0.0;
    for (const auto &e : entries) {
        if (!e.pass()) {
            ++failed;
            std::printf("    outside bound: %s observed %.6f expected %.6f bound %.6f\n", e.name.c_str(), e.observed,
                        e.expected, e.bound);
        }
        if (e.bound > 0) {
            worst_ratio = std::max(worst_ratio, e.deviation() / e.bound);
        }
    }
    Verdict o;
    o.pass = failed == 0 && secs < 10.0;
    o.detail = std::to_string(entries.size()) + " frequencies at 10^4 shots, " + std::to_string(failed) +
               " outside 3 sigma" + fmt(", worst deviation %.2f of bound, %.2f s (limit 10 s)", worst_ratio, secs);
    return o;
}

Verdict measurement_order_equivalence() {
    Worst dev;
    bool same_set = true;
    for (const auto &p : random_params(200, 3)) {
        auto standard = run_standard(p, RunMode::enumerate());
        auto two_step = run_two_step(p, ResourceKind::Entangled, StopAfter::Step2, RunMode::enumerate());
        std::map<int, const Transcript *> by_outcome;
        for (const auto &t : standard) {
            by_outcome[bell_index(t)] = &t;
        }
        same_set = same_set && standard.size() == 4 && two_step.size() == 4 && by_outcome.size() == 4;
        std::map<int, int> seen;
        for (const auto &t : two_step) {
            auto it = by_outcome.find(bell_index(t));
            if (it == by_outcome.end() || seen[bell_index(t)]++ > 0) {
                same_set = false;
                continue;
            }
            dev.add(std::abs(t.probability - it->second->probability));
            dev.add(std::abs(t.fidelity - it->second->fidelity));
            dev.add(max_abs_diff(t.final_b(), it->second->final_b()));
        }
    }
    Verdict o;
    o.pass = same_set && dev.value < 1e-12;
    o.detail = std::string("200 parameter sets, branch sets ") + (same_set ? "match" : "DIFFER") +
               fmt(", max probability/fidelity/state difference = %.2e (tol %.0e)", dev.value, 1e-12);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"bell-branch uniformity", bell_branch_uniformity},
        {"teleportation correctness", teleportation_correctness},
        {"step 1 marginal", step1_marginal},
        {"phi delocalization", phi_delocalization},
        {"classical-resource step 2", classical_resource_step2},
        {"entanglement swap", entanglement_swap},
        {"otp exactness", otp_exactness},
        {"delocalization exactness", delocalization_exactness},
        {"statistical consistency", statistical_consistency},
        {"measurement-order equivalence", measurement_order_equivalence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
