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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "teleport/json.hpp"

using namespace teleport;
using teleport::cli::run_cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, standard_enumerate) {
    auto r = invoke({"run", "--protocol", "standard", "--theta", "0.7854", "--phi", "1.5708", "--mode", "enumerate"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(schema_problem(doc), "");
    ASSERT_EQ(doc["branches"].size(), 4u);
    for (const auto &b : doc["branches"]) {
        EXPECT_NEAR(b["probability"].get<double>(), 0.25, 1e-12);
        EXPECT_NEAR(b["fidelity"].get<double>(), 1.0, 1e-12);
    }
}

TEST(Cli, two_step_classical_step2) {
    auto r = invoke({"run", "--protocol", "two-step", "--resource", "classical", "--stop-after", "step2", "--theta",
                     "0.7854", "--phi", "1"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["config"]["resource"], "classical");
    EXPECT_EQ(doc["config"]["stop_after"], "step2");
    double c = std::cos(0.7854), s = std::sin(0.7854);
    for (const auto &b : doc["branches"]) {
        EXPECT_NEAR(b["fidelity"].get<double>(), std::pow(c, 4) + std::pow(s, 4), 1e-12);
    }
}

TEST(Cli, otp_sample_is_reproducible) {
    std::vector<std::string> args = {"run", "--protocol", "otp", "--p", "0.9", "--mode", "sample", "--shots", "2000",
                                     "--seed", "7"};
    auto a = invoke(args);
    auto b = invoke(args);
    ASSERT_EQ(a.code, cli::kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto doc = json::parse(a.out);
    EXPECT_EQ(doc["branches"].size(), 2000u);
    for (const auto &row : doc["branches"]) {
        EXPECT_EQ(row["recovered"], row["a"]);
    }
    double f = doc["summary"]["communicated"]["frequency_zero"].get<double>();
    EXPECT_NEAR(f, 0.5, 3 * std::sqrt(0.25 / 2000));
    auto other = invoke({"run", "--protocol", "otp", "--p", "0.9", "--mode", "sample", "--shots", "2000", "--seed", "8"});
    EXPECT_NE(a.out, other.out);
}

TEST(Cli, quantum_sample_is_reproducible) {
    std::vector<std::string> args = {"run", "--protocol", "standard", "--theta", "1", "--phi", "2",
                                     "--mode", "sample", "--shots", "200", "--seed", "3"};
    auto a = invoke(args);
    auto b = invoke(args);
    ASSERT_EQ(a.code, cli::kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(json::parse(a.out)["summary"].contains("message_frequencies"));
}

TEST(Cli, delocalize_csv) {
    auto r = invoke({"run", "--protocol", "delocalize", "--p", "0.3", "--format", "csv"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "d,x,y,x~,x~^y,probability");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, usage_errors_exit_two) {
    const std::vector<std::vector<std::string>> bad = {
        {"run", "--protocol", "otp"},
        {"run", "--protocol", "standard", "--theta", "0.5"},
        {"run", "--protocol", "standard", "--theta", "2", "--phi", "0"},
        {"run", "--protocol", "standard", "--theta", "0.5", "--phi", "7"},
        {"run", "--protocol", "standard", "--theta", "0.5", "--phi", "0", "--mode", "sample"},
        {"run", "--protocol", "standard", "--theta", "0.5", "--phi", "0", "--shots", "10"},
        {"run", "--protocol", "standard", "--theta", "0.5", "--phi", "0", "--resource", "classical"},
        {"run", "--protocol", "standard", "--theta", "0.5", "--phi", "0", "--format", "csv"},
        {"run", "--protocol", "otp", "--p", "1.5"},
        {"run", "--protocol", "otp", "--p", "0.5", "--theta", "0.1"},
        {"run", "--protocol", "nope"},
        {"run", "--protocol", "two-step", "--theta", "0.5", "--phi", "0", "--stop-after", "step3"},
        {"run", "--bogus"},
        {"verify", "--suite", "everything"},
        {},
    };
    for (const auto &args : bad) {
        auto r = invoke(args);
        std::string joined;
        for (const auto &a : args) {
            joined += a + " ";
        }
        EXPECT_EQ(r.code, cli::kExitUsage) << joined;
        EXPECT_TRUE(r.out.empty() || args.empty()) << joined;
    }
}

TEST(Cli, output_file) {
    auto path = std::filesystem::temp_directory_path() / "teleport_cli_test_output.json";
    std::filesystem::remove(path);
    auto r = invoke({"run", "--protocol", "otp", "--p", "0.5", "--output", path.string()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    auto doc = json::parse(in);
    EXPECT_EQ(doc["branches"].size(), 4u);
    std::filesystem::remove(path);
}

TEST(Cli, verify_classical_suite) {
    auto r = invoke({"verify", "--suite", "classical"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["pass"], true);
}

TEST(Cli, help_exits_zero) {
    auto r = invoke({"--help"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("run"), std::string::npos);
}

TEST(Cli, validate_rejects_combinations) {
    cli::RunConfig c;
    c.protocol = "two-step";
    c.theta = 0.5;
    c.phi = 0.1;
    EXPECT_EQ(cli::validate(c), "");
    c.format = "csv";
    EXPECT_NE(cli::validate(c), "");
}
