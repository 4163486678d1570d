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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "teleport/analysis.hpp"
#include "teleport/classical.hpp"
#include "teleport/json.hpp"
#include "teleport/protocols.hpp"
#include "teleport/rng.hpp"
#include "teleport/verify.hpp"

namespace teleport::cli {

namespace {

bool is_quantum(const std::string &protocol) {
    return protocol == "standard" || protocol == "two-step";
}

json config_json(const RunConfig &c) {
    json j{{"protocol", c.protocol}, {"mode", c.mode}, {"seed", c.seed}, {"format", c.format}};
    j["theta"] = c.theta ? json(*c.theta) : json(nullptr);
    j["phi"] = c.phi ? json(*c.phi) : json(nullptr);
    j["p"] = c.p ? json(*c.p) : json(nullptr);
    j["shots"] = c.shots ? json(*c.shots) : json(nullptr);
    if (c.protocol == "two-step") {
        j["resource"] = c.resource.value_or("entangled");
        j["stop_after"] = c.stop_after.value_or("step2");
    }
    return j;
}

struct Output {
    std::string text;
    bool invariant_ok = true;
};

Output run_quantum(const RunConfig &c) {
    BlochParams params{*c.theta, *c.phi};
    const bool sample = c.mode == "sample";
    const ResourceKind resource =
        c.resource.value_or("entangled") == "classical" ? ResourceKind::ClassicalCorrelated : ResourceKind::Entangled;
    const StopAfter stop = c.stop_after.value_or("step2") == "step1" ? StopAfter::Step1 : StopAfter::Step2;

    std::vector<Transcript> ts;
    if (c.protocol == "standard") {
        ts = sample ? analysis::sample_standard(params, c.seed, *c.shots) : run_standard(params, RunMode::enumerate());
    } else {
        ts = sample ? analysis::sample_two_step(params, resource, stop, c.seed, *c.shots)
                    : run_two_step(params, resource, stop, RunMode::enumerate());
    }

    Output out;
    json branches = json::array();
    double total = 0.0;
    std::map<std::string, std::size_t> counts;
    for (const auto &t : ts) {
        branches.push_back(to_json(t));
        total += t.probability;
        std::string key;
        for (Bit b : t.bits()) {
            key += std::to_string(to_int(b));
        }
        ++counts[key];
        const bool must_teleport = c.protocol == "standard" ||
                                   (resource == ResourceKind::Entangled && stop == StopAfter::Step2);
        if (must_teleport && t.fidelity < 1.0 - kTolerance) {
            out.invariant_ok = false;
        }
    }
    if (!sample && std::abs(total - 1.0) > kTolerance) {
        out.invariant_ok = false;
    }
    json doc = make_document(config_json(c), std::move(branches));
    if (sample) {
        json freq = json::object();
        for (const auto &[k, n] : counts) {
            freq[k] = static_cast<double>(n) / static_cast<double>(ts.size());
        }
        doc["summary"] = json{{"message_frequencies", std::move(freq)}};
    }
    out.text = dump(doc);
    return out;
}

Output run_classical(const RunConfig &c) {
    using namespace classical;
    const double p = *c.p;
    Output out;
    const bool sample = c.mode == "sample";
    if (c.protocol == "otp") {
        std::vector<OtpRow> rows;
        json summary;
        if (sample) {
            BitSource source(p, shot_seed(c.seed, 0));
            SharedKey key = SharedKey::generate(*c.shots, shot_seed(c.seed, 1));
            auto run = run_otp(source, key, *c.shots);
            for (const auto &t : run.transcripts) {
                out.invariant_ok &= t.recovered == t.input;
                rows.push_back({t.input, t.key.alice, t.key.bob, t.communicated, t.recovered,
                                (t.input == Bit::Zero ? p : 1.0 - p) * 0.5});
            }
            summary = json{{"input", to_json(run.input_bias)},
                           {"communicated", to_json(run.communicated_bias)},
                           {"recovered", to_json(run.recovered_bias)}};
        } else {
            auto table = otp_truth_table(p);
            rows.assign(table.begin(), table.end());
            auto dist = otp_distribution(p);
            out.invariant_ok &= std::abs(dist.communicated[0] - 0.5) <= kTolerance;
            summary = json{{"communicated_distribution", dist.communicated},
                           {"recovered_distribution", dist.recovered},
                           {"input_distribution", dist.input}};
        }
        for (const auto &r : rows) {
            out.invariant_ok &= r.recovered == r.a;
        }
        if (c.format == "csv") {
            out.text = otp_csv(rows);
        } else {
            json branches = json::array();
            for (const auto &r : rows) {
                branches.push_back(to_json(r));
            }
            json doc = make_document(config_json(c), std::move(branches));
            doc["summary"] = std::move(summary);
            out.text = dump(doc);
        }
        return out;
    }

    std::vector<DelocalizationRow> rows;
    json summary;
    if (sample) {
        BitSource source(p, shot_seed(c.seed, 0));
        SharedKey key = SharedKey::generate(*c.shots, shot_seed(c.seed, 1));
        rows = run_delocalize(source, key, *c.shots);
        std::vector<Bit> updated;
        for (const auto &r : rows) {
            updated.push_back(r.x_updated);
        }
        summary = json{{"x_updated", to_json(bias_of(updated))}};
    } else {
        auto table = delocalization_table(p);
        rows.assign(table.begin(), table.end());
        summary = json{{"p_updated_zero", prob_updated_zero(p)}};
    }
    for (const auto &r : rows) {
        out.invariant_ok &= r.parity == r.d;
    }
    if (c.format == "csv") {
        out.text = delocalization_csv(rows);
    } else {
        json branches = json::array();
        for (const auto &r : rows) {
            branches.push_back(to_json(r));
        }
        json doc = make_document(config_json(c), std::move(branches));
        doc["summary"] = std::move(summary);
        out.text = dump(doc);
    }
    return out;
}

bool write_output(const std::optional<std::string> &path, const std::string &text, std::ostream &out,
                  std::ostream &err) {
    if (!path) {
        out << text;
        return true;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file '" << *path << "'\n";
        return false;
    }
    f << text;
    return static_cast<bool>(f);
}

}  // namespace

std::string validate(const RunConfig &c) {
    static const std::vector<std::string> protocols = {"standard", "two-step", "otp", "delocalize"};
    if (std::find(protocols.begin(), protocols.end(), c.protocol) == protocols.end()) {
        return "--protocol must be one of standard, two-step, otp, delocalize";
    }
    const bool quantum = is_quantum(c.protocol);
    if (quantum != (c.theta.has_value() && c.phi.has_value()) || (!quantum && (c.theta || c.phi))) {
        return quantum ? "--theta and --phi are required for quantum protocols"
                       : "--theta/--phi apply to quantum protocols only";
    }
    if (quantum == c.p.has_value()) {
        return quantum ? "--p applies to classical protocols only" : "--p is required for classical protocols";
    }
    if (c.mode != "enumerate" && c.mode != "sample") {
        return "--mode must be enumerate or sample";
    }
    if ((c.mode == "sample") != c.shots.has_value()) {
        return c.mode == "sample" ? "--shots is required in sample mode" : "--shots applies to sample mode only";
    }
    if (c.shots && *c.shots == 0) {
        return "--shots must be at least 1";
    }
    if ((c.resource || c.stop_after) && c.protocol != "two-step") {
        return "--resource/--stop-after apply to the two-step protocol only";
    }
    if (c.resource && *c.resource != "entangled" && *c.resource != "classical") {
        return "--resource must be entangled or classical";
    }
    if (c.stop_after && *c.stop_after != "step1" && *c.stop_after != "step2") {
        return "--stop-after must be step1 or step2";
    }
    if (c.format != "json" && c.format != "csv") {
        return "--format must be json or csv";
    }
    if (c.format == "csv" && quantum) {
        return "--format csv is available for classical protocols only";
    }
    try {
        if (quantum) {
            BlochParams{*c.theta, *c.phi}.validate();
        } else {
            classical::validate_probability(*c.p);
        }
    } catch (const DomainError &e) {
        return e.what();
    }
    return {};
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact simulator for quantum teleportation and its classical analogues"};
    app.require_subcommand(1);

    RunConfig config;
    auto *run = app.add_subcommand("run", "Run one protocol and emit its transcripts");
    run->add_option("--protocol", config.protocol, "standard | two-step | otp | delocalize")->required();
    run->add_option("--theta", config.theta, "Polar angle in radians, [0, pi/2]");
    run->add_option("--phi", config.phi, "Azimuthal angle in radians, [0, 2pi)");
    run->add_option("--resource", config.resource, "entangled | classical (two-step only)");
    run->add_option("--stop-after", config.stop_after, "step1 | step2 (two-step only)");
    run->add_option("--mode", config.mode, "enumerate | sample");
    run->add_option("--shots", config.shots, "Number of sampled runs");
    run->add_option("--seed", config.seed, "64-bit master seed");
    run->add_option("--p", config.p, "Probability that the classical source emits 0");
    run->add_option("--format", config.format, "json | csv");
    run->add_option("--output", config.output, "Write to this file instead of stdout");

    std::string suite = "all";
    std::uint64_t verify_seed = VerifyOptions{}.seed;
    std::optional<std::string> verify_output;
    auto *verify = app.add_subcommand("verify", "Check every invariant and print a JSON report");
    verify->add_option("--suite", suite, "all | quantum | classical")
        ->check(CLI::IsMember({"all", "quantum", "classical"}));
    verify->add_option("--seed", verify_seed, "Seed for the sampled checks");
    verify->add_option("--output", verify_output, "Write the report to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (auto problem = validate(config); !problem.empty()) {
                err << "error: " << problem << "\n" << run->help();
                return kExitUsage;
            }
            Output result = is_quantum(config.protocol) ? run_quantum(config) : run_classical(config);
            if (!write_output(config.output, result.text, out, err)) {
                return kExitUsage;
            }
            if (!result.invariant_ok) {
                err << "error: invariant violated during run\n";
                return kExitInvariant;
            }
            return kExitOk;
        }
        VerifyOptions options;
        options.suite = suite == "quantum" ? Suite::Quantum : suite == "classical" ? Suite::Classical : Suite::All;
        options.seed = verify_seed;
        VerifyReport report = run_verification(options);
        if (!write_output(verify_output, dump(to_json(report)), out, err)) {
            return kExitUsage;
        }
        for (const auto &c : report.checks) {
            if (!c.pass) {
                err << "FAIL " << c.name << ": measured " << c.measured << " > bound " << c.bound << "\n";
            }
        }
        return report.passed() ? kExitOk : kExitInvariant;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

}  // namespace teleport::cli
