// Copyright 2026 The dimwit Authors
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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

#include "dimwit/bounds.h"

using dimwit::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return ::testing::TempDir() + "dimwit_cli_" + name;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, simulate_ideal_passes) {
    auto r = invoke({"simulate", "--seed", "42", "--shots", "10000", "--jobs", "10", "--reps", "10"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = json::parse(r.out);
    ASSERT_EQ(j["report"]["n_trials"], 1000000);
    ASSERT_LE(std::abs(j["report"]["W_i"].get<double>()), 5 * j["report"]["sigma_i"].get<double>());
    ASSERT_EQ(j["report"]["faulty"], false);
}

TEST(cli, artifacts_embed_version_config_and_seed) {
    auto r = invoke({"simulate", "--seed", "9", "--noise", "dephasing", "--strength", "0.1", "--shots", "100",
                     "--jobs", "2", "--reps", "1"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = json::parse(r.out);
    ASSERT_EQ(j["tool"], "dimwit");
    ASSERT_EQ(j["version"], DIMWIT_VERSION);
    ASSERT_EQ(j["seed"], 9);
    ASSERT_EQ(j["config"]["noise"], "dephasing");
    ASSERT_EQ(j["config"]["strength"], 0.1);
    ASSERT_EQ(j["config"]["shots"], 100);
    ASSERT_EQ(j["dataset"]["jobs"].size(), 2u);
}

TEST(cli, byte_identical_reruns) {
    std::vector<std::string> args = {"simulate", "--seed", "5", "--noise", "z_drift", "--strength", "0.2",
                                     "--shots", "1000", "--jobs", "4", "--reps", "3"};
    auto a = invoke(args);
    auto b = invoke(args);
    ASSERT_EQ(a.out, b.out);
    auto path = temp_path("rerun.json");
    args.insert(args.end(), {"--out", path});
    ASSERT_EQ(invoke(args).status, 0);
    ASSERT_EQ(slurp(path), a.out);

    auto c = invoke({"bounds", "--restarts", "3", "--seed", "1"});
    auto d = invoke({"bounds", "--restarts", "3", "--seed", "1"});
    ASSERT_EQ(c.out, d.out);
}

TEST(cli, bounds_reaches_qutrit_maximum) {
    auto r = invoke({"bounds", "--restarts", "64", "--seed", "2026"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = json::parse(r.out);
    ASSERT_NEAR(j["qutrit"]["maximum"].get<double>(), dimwit::kQutritWitnessMaximum, 1e-7);
    ASSERT_EQ(j["classical"]["maximum"], 3.0);
    ASSERT_EQ(j["config"]["restarts"], 64);
}

TEST(cli, leakage_reports_pulse_quantities) {
    auto r = invoke({"leakage"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = json::parse(r.out);
    ASSERT_NEAR(j["max_leak_probability"].get<double>() / 3.6e-7, 1, 0.1);
    ASSERT_LT(j["relative_gap"].get<double>(), 1e-8);
    ASSERT_NEAR(j["ode"]["ratio_to_perturbative"].get<double>(), 1, 0.3);
    ASSERT_LE(j["ode"]["leak_with_drag"].get<double>(), j["ode"]["leak_without_drag"].get<double>());
    ASSERT_EQ(j["config"]["pulse"]["n_t"], 256);

    auto moved = invoke({"leakage", "--pulse-nu", "-0.62", "--pulse-nT", "256"});
    ASSERT_EQ(moved.status, 0) << moved.err;
    ASSERT_LT(json::parse(moved.out)["max_leak_probability"].get<double>(), j["max_leak_probability"].get<double>());
}

TEST(cli, analyze_flags_leaky_dataset) {
    // Detection needs N ~ 6e7 for this leak strength; N = 1e8 here.
    auto data = temp_path("leak.json");
    auto sim = invoke({"simulate", "--noise", "qutrit_leak", "--strength", "0.05", "--shots", "100000", "--jobs",
                       "100", "--reps", "10", "--seed", "11", "--dataset-out", data});
    ASSERT_EQ(sim.status, 2);
    auto r = invoke({"analyze", "--input", data});
    ASSERT_EQ(r.status, 2) << r.err;
    auto j = json::parse(r.out);
    ASSERT_EQ(j["reports"][0]["faulty"], true);

    auto text = invoke({"report", "--input", data});
    ASSERT_EQ(text.status, 2);
    ASSERT_NE(text.out.find("yes"), std::string::npos);
}

// N = 1e7 variant; the exact W sits near 2 sigma there. See the acceptance suite.
TEST(cli, DISABLED_analyze_flags_leaky_dataset_at_ten_million) {
    auto data = temp_path("leak7.json");
    invoke({"simulate", "--noise", "qutrit_leak", "--strength", "0.05", "--shots", "10000", "--jobs", "100",
            "--reps", "10", "--seed", "11", "--dataset-out", data});
    ASSERT_EQ(invoke({"analyze", "--input", data}).status, 2);
}

TEST(cli, analyze_passes_ideal_dataset) {
    auto data = temp_path("ideal.json");
    ASSERT_EQ(invoke({"simulate", "--shots", "10000", "--jobs", "10", "--reps", "10", "--seed", "4",
                      "--dataset-out", data})
                  .status,
              0);
    auto r = invoke({"analyze", "--input", data, "--threshold-sigma", "5"});
    ASSERT_EQ(r.status, 0) << r.err;
    ASSERT_EQ(json::parse(r.out)["reports"][0]["faulty"], false);
}

TEST(cli, usage_and_validation_errors) {
    ASSERT_EQ(invoke({}).status, 1);
    ASSERT_EQ(invoke({"frobnicate"}).status, 1);
    ASSERT_EQ(invoke({"simulate", "--bogus"}).status, 1);
    ASSERT_EQ(invoke({"simulate", "--shots", "ten"}).status, 1);
    ASSERT_EQ(invoke({"simulate", "--noise", "crosstalk", "--strength", "0.1"}).status, 1);
    ASSERT_EQ(invoke({"simulate", "--noise", "dephasing", "--strength", "2"}).status, 1);
    ASSERT_EQ(invoke({"simulate", "--shots", "0"}).status, 1);
    ASSERT_EQ(invoke({"bounds", "--restarts", "0"}).status, 1);
    ASSERT_EQ(invoke({"leakage", "--pulse-dt", "-1"}).status, 1);
    ASSERT_EQ(invoke({"analyze", "--input", temp_path("missing.json")}).status, 1);
    ASSERT_EQ(invoke({"analyze"}).status, 1);

    auto bad = temp_path("bad.json");
    std::ofstream(bad) << R"({"device": "x", "qubit": 0, "shots": 10, "reps_per_job": 1, "jobs": []})";
    auto r = invoke({"analyze", "--input", bad});
    ASSERT_EQ(r.status, 1);
    ASSERT_NE(r.err.find("$.jobs"), std::string::npos) << r.err;
    ASSERT_EQ(invoke({"analyze", "--input", bad, "--threshold-sigma", "-1"}).status, 1);
}

TEST(cli, help_and_version) {
    auto h = invoke({"--help"});
    ASSERT_EQ(h.status, 0);
    ASSERT_NE(h.out.find("simulate"), std::string::npos);
    auto v = invoke({"--version"});
    ASSERT_EQ(v.status, 0);
    ASSERT_NE(v.out.find(DIMWIT_VERSION), std::string::npos);
}
