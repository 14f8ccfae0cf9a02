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
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dimwit/bounds.h"
#include "dimwit/dataset.h"
#include "dimwit/error.h"
#include "dimwit/pulse.h"

namespace dimwit::cli {

namespace {

using json = nlohmann::ordered_json;

const char *command_name(Command c) {
    switch (c) {
        case Command::kSimulate:
            return "simulate";
        case Command::kBounds:
            return "bounds";
        case Command::kLeakage:
            return "leakage";
        case Command::kAnalyze:
            return "analyze";
        case Command::kReport:
            return "report";
    }
    return "?";
}

json complex_json(std::complex<double> z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json pulse_json(const PulseParams &p) {
    return json{{"n_t", p.n_t},
                {"n_sigma", p.n_sigma},
                {"delta_t", p.delta_t},
                {"nu", p.nu},
                {"lambda", p.lambda}};
}

json config_json(const RunConfig &c) {
    json out = json::object();
    out["command"] = command_name(c.command);
    out["seed"] = c.seed;
    switch (c.command) {
        case Command::kSimulate:
            out["noise"] = c.noise ? std::string(noise_kind_name(c.noise->kind)) : "none";
            out["strength"] = c.noise ? c.noise->strength : 0.0;
            out["shots"] = c.shots;
            out["jobs"] = c.jobs;
            out["reps"] = c.reps;
            out["device"] = c.device;
            out["qubit"] = c.qubit;
            out["threshold_sigma"] = c.threshold_sigma;
            break;
        case Command::kBounds:
            out["restarts"] = c.restarts;
            break;
        case Command::kLeakage:
            out["pulse"] = pulse_json(c.pulse);
            break;
        case Command::kAnalyze:
        case Command::kReport:
            out["inputs"] = c.inputs;
            out["threshold_sigma"] = c.threshold_sigma;
            break;
    }
    return out;
}

json artifact_header(const RunConfig &c) {
    json out = json::object();
    out["tool"] = "dimwit";
    out["version"] = DIMWIT_VERSION;
    out["seed"] = c.seed;
    out["config"] = config_json(c);
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        throw std::runtime_error("cannot write " + path);
    }
}

/// Writes the artifact to --out or to `out`.
void emit_artifact(const RunConfig &c, const json &artifact, std::ostream &out) {
    std::string text = artifact.dump(2) + "\n";
    if (c.output_path.empty()) {
        out << text;
    } else {
        write_file(c.output_path, text);
    }
}

json qubit_report_json(const QubitReport &r) {
    return json::parse(report_json(r));
}

int run_simulate(const RunConfig &c, std::ostream &out) {
    ProtocolSpec spec = c.noise ? noisy_protocol(*c.noise) : ideal_protocol();
    ProtocolProbabilities probs = protocol_probabilities(spec);
    Dataset d = sample_counts(probs.table, c.shots, c.jobs, c.reps, c.seed, c.device, c.qubit);
    QubitReport r = report(d, c.threshold_sigma);

    json artifact = artifact_header(c);
    json table = json::object();
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        table[experiment_key(a)] = probs.table.values[a];
    }
    artifact["exact_probabilities"] = table;
    artifact["exact_witness"] = witness_value(probs.table);
    artifact["report"] = qubit_report_json(r);
    artifact["dataset"] = json::parse(emit(d));
    if (!c.dataset_out.empty()) {
        write_file(c.dataset_out, emit(d));
    }
    emit_artifact(c, artifact, out);
    return r.faulty ? kExitFaulty : kExitOk;
}

int run_bounds(const RunConfig &c, std::ostream &out) {
    QutritOptimum opt = maximize_qutrit(c.seed, c.restarts);
    ClassicalBound classical = classical_bound_scan();

    json artifact = artifact_header(c);
    artifact["qutrit"] = json{{"maximum", opt.value},
                              {"params",
                               {{"phi", opt.params.phi},
                                {"alpha1", opt.params.alpha1},
                                {"alpha2", opt.params.alpha2},
                                {"alpha3", opt.params.alpha3}}}};
    json argmax = json::array();
    for (const auto &t : classical.argmax) {
        json row = json::object();
        for (std::size_t a = 0; a < kNumExperiments; a++) {
            row[experiment_key(a)] = static_cast<int>(t.values[a]);
        }
        argmax.push_back(row);
    }
    artifact["classical"] =
        json{{"maximum", classical.maximum}, {"minimum", classical.minimum}, {"argmax", argmax}};
    emit_artifact(c, artifact, out);
    return kExitOk;
}

int run_leakage(const RunConfig &c, std::ostream &out) {
    const PulseParams &p = c.pulse;
    p.validate();
    LeakAmplitude z = leak_amplitude_z(p);
    double predicted = max_leak_probability(z.z);
    auto state = maximal_leak_state(z.z);
    std::array<std::complex<double>, 3> psi = {state[0], state[1], 0};
    ThreeLevelResult plain = simulate_three_level(p, psi);
    ThreeLevelOptions with_drag;
    with_drag.drag = true;
    ThreeLevelResult drag = simulate_three_level(p, psi, with_drag);
    double leak_plain = std::norm(plain.psi[2]);
    double leak_drag = std::norm(drag.psi[2]);

    json artifact = artifact_header(c);
    artifact["z"] = complex_json(z.z);
    artifact["z_by_parts"] = complex_json(z.z_by_parts);
    artifact["relative_gap"] = z.relative_gap;
    artifact["quadrature_error_estimate"] = z.error_estimate;
    artifact["max_leak_probability"] = predicted;
    artifact["global_phase_theta"] = global_phase_theta(p);
    artifact["maximal_state"] = json::array({complex_json(state[0]), complex_json(state[1])});
    artifact["ode"] = json{{"leak_without_drag", leak_plain},
                           {"leak_with_drag", leak_drag},
                           {"ratio_to_perturbative", leak_plain / predicted},
                           {"max_norm_drift", std::max(plain.max_norm_drift, drag.max_norm_drift)},
                           {"richardson_error", std::max(plain.richardson_error, drag.richardson_error)}};
    emit_artifact(c, artifact, out);
    return kExitOk;
}

int run_analyze(const RunConfig &c, std::ostream &out, bool table_only) {
    std::vector<QubitReport> rows;
    bool faulty = false;
    for (const auto &path : c.inputs) {
        Dataset d;
        try {
            d = ingest(read_file(path));
        } catch (const ValidationError &e) {
            throw ValidationError(path + ": " + e.what());
        }
        rows.push_back(report(d, c.threshold_sigma));
        faulty = faulty || rows.back().faulty;
    }

    json artifact = artifact_header(c);
    json reports = json::array();
    for (const auto &r : rows) {
        reports.push_back(qubit_report_json(r));
    }
    artifact["reports"] = reports;
    if (table_only && !c.output_path.empty()) {
        write_file(c.output_path, artifact.dump(2) + "\n");
        out << report_text(rows);
    } else if (table_only) {
        out << report_text(rows);
    } else {
        emit_artifact(c, artifact, out);
    }
    return faulty ? kExitFaulty : kExitOk;
}

}  // namespace

int execute(const RunConfig &config, std::ostream &out) {
    switch (config.command) {
        case Command::kSimulate:
            return run_simulate(config, out);
        case Command::kBounds:
            return run_bounds(config, out);
        case Command::kLeakage:
            return run_leakage(config, out);
        case Command::kAnalyze:
            return run_analyze(config, out, false);
        case Command::kReport:
            return run_analyze(config, out, true);
    }
    return kExitUsage;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig c;
    CLI::App app{"Determinant dimension witness toolkit", "dimwit"};
    app.set_version_flag("--version", std::string(DIMWIT_VERSION));
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", c.seed, "Top-level random seed (echoed in every artifact)");
        sub->add_option("--out", c.output_path, "Write the JSON artifact here instead of stdout");
    };

    std::string noise_name = "none";
    double strength = 0;
    auto *simulate = app.add_subcommand("simulate", "Sample a synthetic dataset and analyze it");
    add_common(simulate);
    simulate->add_option("--noise", noise_name, "none|amplitude_damping|dephasing|over_rotation|z_drift|qutrit_leak")
        ->capture_default_str();
    simulate->add_option("--strength", strength, "Noise strength (probability or radians)");
    simulate->add_option("--shots", c.shots, "Shots per job")->capture_default_str();
    simulate->add_option("--jobs", c.jobs, "Number of jobs")->capture_default_str();
    simulate->add_option("--reps", c.reps, "Repetitions per job")->capture_default_str();
    simulate->add_option("--device", c.device, "Device label")->capture_default_str();
    simulate->add_option("--qubit", c.qubit, "Qubit label")->capture_default_str();
    simulate->add_option("--dataset-out", c.dataset_out, "Also write the bare dataset JSON here");
    simulate->add_option("--threshold-sigma", c.threshold_sigma, "Fault threshold in sigma")->capture_default_str();

    auto *bounds = app.add_subcommand("bounds", "Qutrit maximum and classical bound of W");
    add_common(bounds);
    bounds->add_option("--restarts", c.restarts, "Simplex restarts")->capture_default_str();

    auto *leakage = app.add_subcommand("leakage", "Pulse leakage amplitude, phase and ODE cross-check");
    add_common(leakage);
    leakage->add_option("--pulse-nT", c.pulse.n_t, "Samples per pulse")->capture_default_str();
    leakage->add_option("--pulse-nsigma", c.pulse.n_sigma, "Gaussian width in samples")->capture_default_str();
    leakage->add_option("--pulse-dt", c.pulse.delta_t, "Sampling time [ns]")->capture_default_str();
    leakage->add_option("--pulse-nu", c.pulse.nu, "Anharmonicity [GHz]")->capture_default_str();
    leakage->add_option("--pulse-lambda", c.pulse.lambda, "1-2 coupling ratio")->capture_default_str();

    auto *analyze = app.add_subcommand("analyze", "Witness report (JSON) for dataset files");
    add_common(analyze);
    analyze->add_option("--input", c.inputs, "Dataset JSON file(s)")->required()->check(CLI::ExistingFile);
    analyze->add_option("--threshold-sigma", c.threshold_sigma, "Fault threshold in sigma")->capture_default_str();

    auto *report_cmd = app.add_subcommand("report", "Aligned text table for dataset files");
    add_common(report_cmd);
    report_cmd->add_option("--input", c.inputs, "Dataset JSON file(s)")->required()->check(CLI::ExistingFile);
    report_cmd->add_option("--threshold-sigma", c.threshold_sigma, "Fault threshold in sigma")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (simulate->parsed()) {
        c.command = Command::kSimulate;
    } else if (bounds->parsed()) {
        c.command = Command::kBounds;
    } else if (leakage->parsed()) {
        c.command = Command::kLeakage;
    } else if (analyze->parsed()) {
        c.command = Command::kAnalyze;
    } else {
        c.command = Command::kReport;
    }

    try {
        if (c.command == Command::kSimulate && noise_name != "none") {
            c.noise = NoiseConfig{parse_noise_kind(noise_name), strength};
            validate(*c.noise);
        } else if (c.command == Command::kSimulate && strength != 0) {
            throw ValidationError("--strength requires --noise");
        }
        if (!(c.threshold_sigma > 0)) {
            throw ValidationError("--threshold-sigma must be positive");
        }
        if (c.restarts < 1) {
            throw ValidationError("--restarts must be at least 1");
        }
        return execute(c, out);
    } catch (const std::exception &e) {
        err << "dimwit " << command_name(c.command) << ": " << e.what() << "\n";
        return kExitUsage;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv = {"dimwit"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dimwit::cli
