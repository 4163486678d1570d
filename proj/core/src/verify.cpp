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

#include "teleport/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "teleport/analysis.hpp"
#include "teleport/classical.hpp"
#include "teleport/measurement.hpp"
#include "teleport/metrics.hpp"
#include "teleport/rng.hpp"

namespace teleport {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

const Check *VerifyReport::find(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

json to_json(const VerifyReport &report) {
    json checks = json::array();
    for (const auto &c : report.checks) {
        checks.push_back(json{{"name", c.name},
                              {"suite", c.suite},
                              {"measured", c.measured},
                              {"bound", c.bound},
                              {"pass", c.pass}});
    }
    return json{{"schema_version", kSchemaVersion}, {"pass", report.passed()}, {"checks", std::move(checks)}};
}

namespace {

constexpr double kPi = std::numbers::pi;

BlochParams random_params(Rng &rng) {
    return BlochParams{rng.uniform() * kPi / 2, rng.uniform() * 2 * kPi};
}

StateVector random_state(Rng &rng, const Register &reg) {
    Vector v(static_cast<Eigen::Index>(reg.dimension()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    return StateVector::normalized(reg, v);
}

class Recorder {
  public:
    Recorder(VerifyReport &report, std::string suite) : report_(report), suite_(std::move(suite)) {
    }
    void add(std::string name, double measured, double bound) {
        report_.checks.push_back(Check{std::move(name), suite_, measured, bound, measured <= bound});
    }

  private:
    VerifyReport &report_;
    std::string suite_;
};

DensityMatrix branch_mixture_b(const std::vector<Transcript> &ts, bool corrected) {
    std::vector<std::pair<double, DensityMatrix>> parts;
    for (const auto &t : ts) {
        parts.emplace_back(t.probability, corrected ? t.final_b() : t.uncorrected_b());
    }
    return mix(parts);
}

void quantum_checks(const VerifyOptions &opt, VerifyReport &report) {
    Recorder rec(report, "quantum");
    Rng rng = Rng::derive(opt.seed, 100);
    const CorrectionTable &table = opt.corrections;

    {
        double worst = 0.0;
        Register reg{"a", "A", "B"};
        const std::vector<std::pair<Gate, std::vector<std::string>>> ops = {
            {gates::hadamard(), {"a"}}, {gates::pauli_y(), {"A"}}, {gates::cnot(), {"a", "B"}}, {gates::cnot(), {"B", "A"}}};
        for (int trial = 0; trial < 200; ++trial) {
            Vector v = random_state(rng, reg).amplitudes();
            for (const auto &[g, t] : ops) {
                v = embed(g, reg, t) * v;
                worst = std::max(worst, std::abs(v.norm() - 1.0));
            }
        }
        rec.add("norm_preservation", worst, kTolerance);
    }

    {
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            StateVector s = random_state(rng, Register{"a", "A", "B"});
            worst = std::max(worst, std::abs(measure(s, MeasurementBasis::bell(), {"a", "A"}).total_probability() - 1.0));
            worst = std::max(worst, std::abs(measure(s, MeasurementBasis::x(), {"B"}).total_probability() - 1.0));
            auto rho = density_from(s);
            worst = std::max(worst, std::abs(measure(rho, MeasurementBasis::z(), {"A"}).total_probability() - 1.0));
        }
        rec.add("born_completeness", worst, kTolerance);
    }

    {
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            StateVector s = random_state(rng, Register{"a", "B"});
            StateVector target = random_state(rng, Register{"a", "B"});
            auto rho = density_from(s);
            auto rho_phase = density_from(s.with_global_phase(rng.uniform() * 2 * kPi));
            worst = std::max(worst, std::abs(fidelity(rho, target) - fidelity(rho_phase, target)));
            worst = std::max(worst, std::abs(concurrence(rho) - concurrence(rho_phase)));
            worst = std::max(worst, max_abs_diff(partial_trace(rho, {"B"}), partial_trace(rho_phase, {"B"})));
        }
        rec.add("global_phase_robustness", worst, kTolerance);
    }

    {
        double worst = 0.0;
        const std::vector<std::vector<std::string>> keeps = {{"a"}, {"B"}, {"A", "B"}, {"B", "a"}, {"a", "A", "B"}};
        for (int trial = 0; trial < 50; ++trial) {
            auto rho = density_from(random_state(rng, Register{"a", "A", "B"}));
            for (const auto &k : keeps) {
                worst = std::max(worst, std::abs(partial_trace(rho, k).trace() - 1.0));
            }
        }
        rec.add("partial_trace_consistency", worst, kTolerance);
    }

    {
        // Payload plus resource, measured two ways: Bell basis directly, or CNOT then z on A and x on a.
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            BlochParams p = random_params(rng);
            StateVector initial = tensor(bloch_state(p, "a"), bell_state(BellKind::PhiPlus, "A", "B"));
            auto bell = measure(initial, MeasurementBasis::bell(), {"a", "A"});
            auto after_cnot = apply_gate(initial, gates::cnot(), {"a", "A"});
            auto z_first = measure(after_cnot, MeasurementBasis::z(), {"A"});
            const std::string a_label[] = {"a"};
            auto joint = then_measure(z_first, MeasurementBasis::x(), a_label);
            if (joint.size() != bell.size()) {
                worst = 1.0;
                continue;
            }
            StateVector target = bloch_state(p, "B");
            for (const auto &jb : joint.branches) {
                auto kind = decode_outcome(to_bit(jb.outcomes[0].index == 1), to_bit(jb.outcomes[1].index == 1));
                auto match = std::find_if(bell.branches.begin(), bell.branches.end(),
                                          [&](const auto &b) { return b.outcomes[0].index == static_cast<std::size_t>(kind); });
                if (match == bell.branches.end()) {
                    worst = 1.0;
                    continue;
                }
                const auto &fix = table.bell[static_cast<std::size_t>(kind)];
                double f_joint = fidelity(apply_sequence(jb.post_state, fix, "B"), target);
                double f_bell = fidelity(apply_sequence(match->post_state, fix, "B"), target);
                worst = std::max({worst, std::abs(jb.probability - match->probability), std::abs(f_joint - f_bell),
                                  1.0 - f_joint});
            }
        }
        rec.add("measurement_order_equivalence", worst, kTolerance);
    }

    {
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            auto ts = run_standard(random_params(rng), RunMode::enumerate(), table);
            worst = std::max(worst, ts.size() == 4 ? 0.0 : 1.0);
            for (const auto &t : ts) {
                worst = std::max(worst, std::abs(t.probability - 0.25));
            }
        }
        rec.add("bell_branch_uniformity_quarter", worst, kTolerance);
    }

    double std_worst = 0.0;
    double two_worst = 0.0;
    double equiv_worst = 0.0;
    double bias_worst = 0.0;
    double signal_worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        BlochParams p = random_params(rng);
        auto std_runs = run_standard(p, RunMode::enumerate(), table);
        auto two_runs = run_two_step(p, ResourceKind::Entangled, StopAfter::Step2, RunMode::enumerate(), table);
        for (const auto &t : std_runs) {
            std_worst = std::max(std_worst, 1.0 - t.fidelity);
        }
        for (const auto &t : two_runs) {
            two_worst = std::max(two_worst, 1.0 - t.fidelity);
        }
        if (trial % 10 != 0) {
            continue;
        }
        if (std_runs.size() != two_runs.size()) {
            equiv_worst = 1.0;
        }
        for (const auto &t2 : two_runs) {
            auto match = std::find_if(std_runs.begin(), std_runs.end(),
                                      [&](const Transcript &t) { return t.bell_equivalent() == t2.bell_equivalent(); });
            if (match == std_runs.end()) {
                equiv_worst = 1.0;
                continue;
            }
            equiv_worst = std::max({equiv_worst, std::abs(match->fidelity - t2.fidelity),
                                    std::abs(match->probability - t2.probability),
                                    trace_distance(match->final_b(), t2.final_b())});
        }
        for (const auto *runs : {&std_runs, &two_runs}) {
            std::array<double, 2> first{}, second{};
            for (const auto &t : *runs) {
                auto b = t.bits();
                first[to_int(b[0])] += t.probability;
                second[to_int(b[1])] += t.probability;
            }
            bias_worst = std::max({bias_worst, std::abs(first[0] - 0.5), std::abs(second[0] - 0.5)});
        }
        DensityMatrix before = partial_trace(density_from(tensor(bloch_state(p, "a"), bell_state(BellKind::PhiPlus, "A", "B"))), {"B"});
        auto step1_runs = run_two_step(p, ResourceKind::Entangled, StopAfter::Step1, RunMode::enumerate(), table);
        for (const auto *runs : {&std_runs, &two_runs, &step1_runs}) {
            signal_worst = std::max(signal_worst, max_abs_diff(branch_mixture_b(*runs, false), before));
        }
    }
    rec.add("teleportation_correctness_standard", std_worst, kTolerance);
    rec.add("teleportation_correctness_two_step", two_worst, kTolerance);
    rec.add("two_step_equivalence", equiv_worst, kTolerance);
    rec.add("message_unbiasedness", bias_worst, kTolerance);
    rec.add("no_signaling", signal_worst, kTolerance);

    {
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            double theta = (kPi / 2) * k / 49.0;
            for (auto res : {ResourceKind::Entangled, ResourceKind::ClassicalCorrelated}) {
                Matrix expected = Matrix::Zero(2, 2);
                expected(0, 0) = std::pow(std::cos(theta), 2);
                expected(1, 1) = std::pow(std::sin(theta), 2);
                for (const auto &t : run_two_step({theta, 1.3}, res, StopAfter::Step1, RunMode::enumerate(), table)) {
                    worst = std::max(worst, (t.final_b().matrix() - expected).cwiseAbs().maxCoeff());
                }
            }
        }
        rec.add("step1_marginal", worst, kTolerance);
    }

    {
        const double phis[] = {0.0, 1.0, 2.0, 3.0, kPi / 2, kPi};
        double worst = 0.0;
        for (double theta : {0.0, 0.3, kPi / 4, kPi / 3, kPi / 2}) {
            for (auto res : {ResourceKind::Entangled, ResourceKind::ClassicalCorrelated}) {
                auto scan = analysis::phi_scan(theta, phis, StopAfter::Step1, res);
                worst = std::max({worst, scan.max_deviation_a, scan.max_deviation_b});
            }
        }
        rec.add("phi_inaccessibility_step1", worst, kTolerance);
    }

    {
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            double theta = (kPi / 2) * k / 49.0;
            double expected = std::pow(std::cos(theta), 4) + std::pow(std::sin(theta), 4);
            for (const auto &t : run_two_step({theta, 0.9}, ResourceKind::ClassicalCorrelated, StopAfter::Step2,
                                              RunMode::enumerate(), table)) {
                worst = std::max(worst, std::abs(t.fidelity - expected));
            }
        }
        rec.add("classical_resource_step2_fidelity", worst, kTolerance);
    }

    {
        double worst = 0.0;
        worst = std::max(worst, std::abs(concurrence(to_density(make_resource(ResourceKind::Entangled))) - 1.0));
        worst = std::max(worst, concurrence(to_density(make_resource(ResourceKind::ClassicalCorrelated))));
        for (int k = 0; k < 50; ++k) {
            double theta = (kPi / 2) * k / 49.0;
            for (const auto &t : run_two_step({theta, 2.1}, ResourceKind::Entangled, StopAfter::Step1,
                                              RunMode::enumerate(), table)) {
                worst = std::max(worst, std::abs(concurrence(to_density(t.final_state)) - std::abs(std::sin(2 * theta))));
            }
            for (const auto &t : run_two_step({theta, 2.1}, ResourceKind::ClassicalCorrelated, StopAfter::Step1,
                                              RunMode::enumerate(), table)) {
                worst = std::max(worst, concurrence(to_density(t.final_state)));
            }
        }
        rec.add("entanglement_bookkeeping", worst, 1e-9);
    }

    {
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            double theta = (kPi / 2) * k / 99.0;
            worst = std::max(worst, std::abs(analysis::estimate_theta(std::pow(std::cos(theta), 2)) - theta));
        }
        rec.add("estimator_consistency", worst, kTolerance);
    }

    {
        double worst = 0.0;
        BlochParams p{kPi / 3, 1.1};
        for (std::size_t shots : {std::size_t{1000}, std::size_t{10000}, std::size_t{100000}}) {
            auto report = analysis::cross_check(p, opt.seed + shots, shots);
            for (const auto &e : report.entries) {
                worst = std::max(worst, e.deviation() / std::max(e.bound, 1e-300));
            }
        }
        rec.add("sampling_consistency (deviation / 3-sigma bound)", worst, 1.0);
    }

    {
        double worst = 0.0;
        BlochParams p{0.7, 2.5};
        auto ent = analysis::bob_step1_report(p, ResourceKind::Entangled, opt.seed, 2000);
        auto cls = analysis::bob_step1_report(p, ResourceKind::ClassicalCorrelated, opt.seed, 2000);
        for (std::size_t i = 0; i < ent.entries.size(); ++i) {
            worst = std::max(worst, std::abs(ent.entries[i].observed - cls.entries[i].observed));
        }
        rec.add("resource_indistinguishability_step1", worst, kTolerance);
    }
}

void classical_checks(const VerifyOptions &opt, VerifyReport &report) {
    using namespace classical;
    Recorder rec(report, "classical");

    {
        double failures = 0;
        for (Bit a : kBits) {
            for (Bit k : kBits) {
                failures += otp_decode(otp_encode(a, k), k) == a ? 0 : 1;
                failures += localize(delocalize(a, k), k) == a ? 0 : 1;
            }
        }
        rec.add("otp_and_delocalization_correctness", failures, 0.0);
    }

    const double ps[] = {0.0, 0.1, 0.25, 0.5, 0.9, 1.0};
    double unbiased = 0.0, independent = 0.0, transport = 0.0, deloc = 0.0;
    for (double p : ps) {
        auto dist = otp_distribution(p);
        unbiased = std::max({unbiased, std::abs(dist.communicated[0] - 0.5), std::abs(dist.communicated[1] - 0.5)});
        for (int a = 0; a < 2; ++a) {
            for (int c = 0; c < 2; ++c) {
                independent = std::max(independent, std::abs(dist.joint[a][c] - dist.input[a] * dist.communicated[c]));
            }
        }
        transport = std::max({transport, std::abs(dist.recovered[0] - p), std::abs(dist.recovered[1] - (1 - p))});
        deloc = std::max(deloc, std::abs(prob_updated_zero(p) - 0.5));
    }
    rec.add("otp_unbiasedness_exact", unbiased, kTolerance);
    rec.add("otp_independence_exact", independent, kTolerance);
    rec.add("otp_distribution_transport", transport, kTolerance);
    rec.add("delocalization_unbiased_exact", deloc, kTolerance);

    {
        BitSource keep_src(0.9, opt.seed), destroy_src(0.9, opt.seed);
        SharedKey keep_key = SharedKey::generate(1000, opt.seed + 1);
        SharedKey destroy_key = SharedKey::generate(1000, opt.seed + 1);
        auto keep = run_otp(keep_src, keep_key, 1000, CopyPolicy::KeepCopy);
        auto destroy = run_otp(destroy_src, destroy_key, 1000, CopyPolicy::DestroyCopy);
        rec.add("one_output_xor_sufficiency", keep.transcripts == destroy.transcripts ? 0.0 : 1.0, 0.0);
    }

    {
        double worst = 0.0;
        const std::size_t shots = 10000;
        for (double p : {0.5, 0.9}) {
            BitSource src(p, shot_seed(opt.seed, 7));
            SharedKey key = SharedKey::generate(shots, shot_seed(opt.seed, 8));
            auto run = run_otp(src, key, shots);
            worst = std::max(worst, std::abs(run.communicated_bias.frequency_zero - 0.5) /
                                        analysis::binomial_bound(0.5, shots));
            worst = std::max(worst, std::abs(run.recovered_bias.frequency_zero - p) /
                                        std::max(analysis::binomial_bound(p, shots), 1e-300));
            for (const auto &t : run.transcripts) {
                worst = std::max(worst, t.recovered == t.input ? 0.0 : 1e9);
            }
        }
        rec.add("otp_sampled_bias (deviation / 3-sigma bound)", worst, 1.0);
    }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions &options) {
    VerifyReport report;
    if (options.suite == Suite::All || options.suite == Suite::Quantum) {
        quantum_checks(options, report);
    }
    if (options.suite == Suite::All || options.suite == Suite::Classical) {
        classical_checks(options, report);
    }
    return report;
}

}  // namespace teleport
