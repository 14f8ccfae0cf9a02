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

#include "dimwit/analysis.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "dimwit/error.h"
#include "json.hpp"

namespace dimwit {

using json = nlohmann::ordered_json;

namespace {

json p_value_json(const PValue &p) {
    json out = json::object();
    out["value"] = p.value;
    if (std::isfinite(p.log10_value)) {
        out["log10"] = p.log10_value;
    } else {
        out["log10"] = nullptr;
    }
    return out;
}

std::string format_double(const char *fmt, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

}  // namespace

ProbTable pooled_table(const Dataset &d) {
    d.validate();
    ProbTable t;
    double total = static_cast<double>(d.total_trials());
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        std::uint64_t sum = 0;
        for (const auto &job : d.jobs) {
            sum += job.counts[a];
        }
        t.values[a] = static_cast<double>(sum) / total;
    }
    t.validate();
    return t;
}

ProbTable job_table(const Dataset &d, std::size_t job) {
    d.validate();
    if (job >= d.jobs.size()) {
        throw ValidationError("job_table: job index out of range");
    }
    ProbTable t;
    double trials = static_cast<double>(d.trials_per_job());
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        t.values[a] = static_cast<double>(d.jobs[job].counts[a]) / trials;
    }
    t.validate();
    return t;
}

WitnessReport witness_mode_i(const Dataset &d) {
    return make_witness_report(pooled_table(d), d.total_trials());
}

ModeIIReport witness_mode_ii(const Dataset &d) {
    d.validate();
    std::size_t jobs = d.jobs.size();
    ModeIIReport out;
    out.report.n_trials = d.trials_per_job();
    double sum_w = 0;
    double sum_var = 0;
    for (std::size_t j = 0; j < jobs; j++) {
        auto r = make_witness_report(job_table(d, j), d.trials_per_job());
        out.job_witnesses.push_back(r.w);
        sum_w += r.w;
        sum_var += r.sigma * r.sigma;
        for (std::size_t i = 0; i < 5; i++) {
            for (std::size_t k = 0; k < 5; k++) {
                out.report.cofactors[i][k] += r.cofactors[i][k] / static_cast<double>(jobs);
            }
        }
    }
    double n = static_cast<double>(jobs);
    out.report.w = sum_w / n;
    out.report.sigma = std::sqrt(sum_var / n) / std::sqrt(n);
    out.report.p = report_p_value(out.report.w, out.report.sigma);
    if (jobs > 1) {
        double ss = 0;
        for (double w : out.job_witnesses) {
            ss += (w - out.report.w) * (w - out.report.w);
        }
        out.empirical_std_error = std::sqrt(ss / (n - 1)) / std::sqrt(n);
    }
    return out;
}

std::array<SanityDifference, 3> sanity_differences(const Dataset &d) {
    ProbTable t = pooled_table(d);
    double n = static_cast<double>(d.total_trials());
    auto diff = [&](std::size_t a, std::size_t b, const char *label) {
        double pa = t.values[a];
        double pb = t.values[b];
        return SanityDifference{label, pa - pb, std::sqrt((pa * (1 - pa) + pb * (1 - pb)) / n)};
    };
    return {diff(0, 4, "p10-p14"), diff(1, 5, "p11-p15"), diff(6, 10, "p20-p24")};
}

double significance(double w, double sigma) {
    if (sigma > 0) {
        return std::abs(w) / sigma;
    }
    return w == 0 ? 0 : std::numeric_limits<double>::infinity();
}

QubitReport make_qubit_report(std::string device,
                              std::int64_t qubit,
                              const WitnessReport &mode_i,
                              const ModeIIReport &mode_ii,
                              const std::array<SanityDifference, 3> &sanity,
                              double threshold_sigma) {
    if (!(threshold_sigma > 0)) {
        throw ValidationError("threshold_sigma must be positive");
    }
    QubitReport r;
    r.device = std::move(device);
    r.qubit = qubit;
    r.n_trials = mode_i.n_trials;
    r.mode_i = mode_i;
    r.mode_ii = mode_ii;
    r.sanity = sanity;
    r.threshold_sigma = threshold_sigma;
    r.faulty = significance(mode_i.w, mode_i.sigma) > threshold_sigma;
    return r;
}

QubitReport report(const Dataset &d, double threshold_sigma) {
    return make_qubit_report(d.device, d.qubit, witness_mode_i(d), witness_mode_ii(d), sanity_differences(d),
                             threshold_sigma);
}

std::string report_json(const QubitReport &r, int indent) {
    json out = json::object();
    out["device"] = r.device;
    out["qubit"] = r.qubit;
    out["n_trials"] = r.n_trials;
    out["W_i"] = r.mode_i.w;
    out["sigma_i"] = r.mode_i.sigma;
    out["W_ii"] = r.mode_ii.report.w;
    out["sigma_ii"] = r.mode_ii.report.sigma;
    out["sigma_ii_empirical"] = r.mode_ii.empirical_std_error;
    out["significance_i"] = significance(r.mode_i.w, r.mode_i.sigma);
    out["significance_ii"] = significance(r.mode_ii.report.w, r.mode_ii.report.sigma);
    out["p_value_i"] = p_value_json(r.mode_i.p);
    out["p_value_ii"] = p_value_json(r.mode_ii.report.p);
    json sanity = json::object();
    for (const auto &s : r.sanity) {
        sanity[s.label] = json{{"value", s.value}, {"std_error", s.std_error}};
    }
    out["sanity"] = std::move(sanity);
    json cof = json::array();
    for (const auto &row : r.mode_i.cofactors) {
        cof.push_back(row);
    }
    out["cofactors_i"] = std::move(cof);
    out["threshold_sigma"] = r.threshold_sigma;
    out["faulty"] = r.faulty;
    return out.dump(indent);
}

std::string report_text(const std::vector<QubitReport> &rows) {
    std::ostringstream ss;
    char line[512];
    std::snprintf(line, sizeof line, "%-16s %6s %12s %11s %12s %11s %10s %10s %11s %11s %11s %6s\n", "device",
                  "qubit", "W_i", "sigma_i", "W_ii", "sigma_ii", "log10p_i", "log10p_ii", "p10-p14", "p11-p15",
                  "p20-p24", "faulty");
    ss << line;
    for (const auto &r : rows) {
        std::snprintf(line, sizeof line, "%-16s %6lld %12s %11s %12s %11s %10s %10s %11s %11s %11s %6s\n",
                      r.device.c_str(), static_cast<long long>(r.qubit), format_double("%.4e", r.mode_i.w).c_str(),
                      format_double("%.3e", r.mode_i.sigma).c_str(),
                      format_double("%.4e", r.mode_ii.report.w).c_str(),
                      format_double("%.3e", r.mode_ii.report.sigma).c_str(),
                      format_double("%.2f", r.mode_i.p.log10_value).c_str(),
                      format_double("%.2f", r.mode_ii.report.p.log10_value).c_str(),
                      format_double("%.3e", r.sanity[0].value).c_str(),
                      format_double("%.3e", r.sanity[1].value).c_str(),
                      format_double("%.3e", r.sanity[2].value).c_str(), r.faulty ? "yes" : "no");
        ss << line;
    }
    return ss.str();
}

}  // namespace dimwit
