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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dimwit/analysis.h"
#include "dimwit/bounds.h"
#include "dimwit/dataset.h"
#include "dimwit/models.h"
#include "dimwit/pulse.h"
#include "dimwit/witness.h"
#include "test_util.h"

using namespace dimwit;
using namespace dimwit::testing;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0: no limit
    std::function<Verdict()> check;
};

std::string fmt(const char *format, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

Verdict null_test_qubit() {
    std::mt19937_64 rng(20260101);
    double worst = 0;
    for (int trial = 0; trial < 200; trial++) {
        ProtocolSpec spec{random_state(2, rng), random_state(2, rng), random_channel(2, 1 + trial % 4, rng),
                          random_effect(2, rng)};
        worst = std::max(worst, std::abs(witness_value(protocol_table(spec))));
    }
    return {worst < 1e-10, fmt("max |W| = %.2e over 200 random qubit models", worst)};
}

Verdict robustness() {
    double worst = 0;
    for (auto kind : {NoiseKind::kAmplitudeDamping, NoiseKind::kDephasing, NoiseKind::kOverRotation,
                      NoiseKind::kZDrift}) {
        for (double s : {0.01, 0.1, 0.5}) {
            worst = std::max(worst, std::abs(witness_value(protocol_table(noisy_protocol({kind, s})))));
        }
    }
    return {worst < 1e-10, fmt("max |W| = %.2e over 4 noise kinds x 3 strengths", worst)};
}

Verdict classical_bound() {
    auto scan = classical_bound_scan();
    std::array<double, 11> reference = {1, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1};
    bool found = false;
    for (const auto &t : scan.argmax) {
        found = found || t.values == reference;
    }
    return {scan.maximum == 3 && found,
            fmt("max = %g, argmax set size %g, known extremal assignment %s", scan.maximum,
                static_cast<double>(scan.argmax.size())) +
                (found ? "found" : "missing")};
}

Verdict qutrit_bound() {
    auto opt = maximize_qutrit(2026, 64);
    double gap = std::abs(opt.value - kQutritWitnessMaximum);
    return {gap <= 1e-7, fmt("max W = %.16f, |gap| = %.2e", opt.value, gap)};
}

Verdict ideal_structure() {
    auto t = protocol_table(ideal_protocol());
    double sanity = std::max({std::abs(t.p1(0) - t.p1(4)), std::abs(t.p1(1) - t.p1(5)), std::abs(t.p2(0) - t.p2(4))});

    auto m = assemble_matrix(t);
    auto c = cofactor_matrix(m);
    const double a = std::numbers::sqrt2 / 8;
    Matrix5 reference{};
    reference[3] = {-a, a, -a, a, 0};
    reference[4] = {a, -a, a, -a, 0};
    Matrix5 fd{};
    for (std::size_t i = 0; i < 5; i++) {
        for (std::size_t j = 0; j < 5; j++) {
            fd[i][j] = det_partial(m, i, j);
        }
    }
    auto max_gap = [](const Matrix5 &x, const Matrix5 &y) {
        double g = 0;
        for (std::size_t i = 0; i < 5; i++) {
            for (std::size_t j = 0; j < 5; j++) {
                g = std::max(g, std::abs(x[i][j] - y[i][j]));
            }
        }
        return g;
    };
    // Finite differences decide whether the reference is C or its transpose.
    bool transposed = max_gap(fd, transpose(reference)) < max_gap(fd, reference);
    Matrix5 oriented = transposed ? transpose(reference) : reference;
    double pattern_gap = max_gap(c, oriented);
    double fd_gap = max_gap(c, fd);
    bool pass = sanity <= 1e-12 && pattern_gap <= 1e-10 && fd_gap <= 1e-7;
    return {pass, fmt("sanity max %.1e, |C - pattern| = %.1e, |C - FD| = %.1e", sanity, pattern_gap, fd_gap) +
                      (transposed ? " (reference is the transpose)" : " (reference is C)")};
}

Verdict error_propagation() {
    const std::uint64_t n = 100000;
    const int samples = 10000;
    ProbTable perturbed = protocol_table(ideal_protocol());
    const std::array<double, 11> shift = {3, -2, 1, -4, 2, 0, -1, 3, -2, 1, -3};
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        perturbed.values[a] += 0.01 * shift[a];
    }
    std::vector<std::pair<std::string, ProbTable>> tables = {
        {"ideal", protocol_table(ideal_protocol())},
        {"qutrit_leak(0.05)", protocol_table(noisy_protocol({NoiseKind::kQutritLeak, 0.05}))},
        {"shifted ideal", perturbed},
    };
    bool pass = true;
    std::ostringstream detail;
    std::mt19937_64 rng(6);
    for (const auto &[name, t] : tables) {
        double sum = 0;
        double sum2 = 0;
        for (int s = 0; s < samples; s++) {
            ProbTable r;
            for (std::size_t a = 0; a < kNumExperiments; a++) {
                std::binomial_distribution<std::uint64_t> b(n, t.values[a]);
                r.values[a] = static_cast<double>(b(rng)) / static_cast<double>(n);
            }
            double w = laplace_determinant(witness_matrix_by_hand(r));
            sum += w;
            sum2 += w * w;
        }
        double mean = sum / samples;
        double empirical = std::sqrt(sum2 / samples - mean * mean);
        double ratio = std::sqrt(variance(t, n)) / empirical;
        pass = pass && std::abs(ratio - 1) <= 0.05;
        detail << name << " " << fmt("%.4f", ratio) << "; ";
    }
    return {pass, "analytic/empirical sigma: " + detail.str()};
}

Verdict p_value_anchor() {
    auto p79 = p_value(7.9, 1);
    auto p71 = p_value(71, 1);
    bool pass = p79.value >= 1e-15 && p79.value <= 1e-14 && p71.log10_value < -1000;
    return {pass, fmt("p(7.9 sigma) = %.3e, log10 p(71 sigma) = %.1f", p79.value, p71.log10_value)};
}

Verdict leakage_number() {
    auto z = leak_amplitude_z(PulseParams{});
    double leak = max_leak_probability(z.z);
    double rel = std::abs(leak / 3.6e-7 - 1);
    return {rel <= 0.10 && z.relative_gap <= 1e-8,
            fmt("4|z|^2 = %.4e (%.1f%% from 3.6e-7), forms differ by %.1e", leak, 100 * rel, z.relative_gap)};
}

Verdict ode_consistency() {
    PulseParams p;
    auto z = leak_amplitude_z(p).z;
    auto s = maximal_leak_state(z);
    auto plain = simulate_three_level(p, {s[0], s[1], 0});
    ThreeLevelOptions drag_on;
    drag_on.drag = true;
    auto drag = simulate_three_level(p, {s[0], s[1], 0}, drag_on);
    double leak = std::norm(plain.psi[2]);
    double leak_drag = std::norm(drag.psi[2]);
    double ratio = leak / max_leak_probability(z);
    return {std::abs(ratio - 1) <= 0.30 && leak_drag <= leak,
            fmt("ODE/perturbative = %.3f, leak without DRAG %.3e, with DRAG %.3e", ratio, leak, leak_drag)};
}

Verdict leakage_sensitivity() {
    auto t = protocol_table(ideal_protocol());
    auto c = cofactor_matrix(assemble_matrix(t));
    double sum_abs = 0;
    for (const auto &row : c) {
        for (double v : row) {
            sum_abs += std::abs(v);
        }
    }
    double bound = 1e-6 * sum_abs;
    // Adversarial shift: every probability moved by 1e-6 along the sign of its gradient,
    // plus random shifts inside the same box.
    auto g = witness_gradient(c);
    ProbDeltas worst{};
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        worst.values[a] = g[a] >= 0 ? 1e-6 : -1e-6;
    }
    double largest = std::abs(first_order_shift(c, worst));
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1e-6, 1e-6);
    for (int k = 0; k < 1000; k++) {
        ProbDeltas d{};
        for (auto &x : d.values) {
            x = u(rng);
        }
        largest = std::max(largest, std::abs(first_order_shift(c, d)));
    }
    // The sign-aligned shift attains the bound, so allow for summation-order rounding.
    return {largest <= bound * (1 + 1e-12) && bound < 1e-5,
            fmt("max |dW| = %.3e <= 1e-6 sum|C| = %.3e < 1e-5", largest, bound)};
}

Verdict end_to_end_pipeline() {
    const std::uint64_t shots = 10000, jobs = 100, reps = 10;
    auto leak_table = protocol_table(noisy_protocol({NoiseKind::kQutritLeak, 0.05}));
    auto ideal_table = protocol_table(ideal_protocol());
    auto leak_a = report(sample_counts(leak_table, shots, jobs, reps, 11));
    auto leak_b = report(sample_counts(leak_table, shots, jobs, reps, 11));
    auto ideal_a = report(sample_counts(ideal_table, shots, jobs, reps, 12));
    auto ideal_b = report(sample_counts(ideal_table, shots, jobs, reps, 12));
    bool deterministic = report_json(leak_a) == report_json(leak_b) && report_json(ideal_a) == report_json(ideal_b);
    double expected = std::abs(witness_value(leak_table)) / std::sqrt(variance(leak_table, leak_a.n_trials));
    bool pass = leak_a.faulty && !ideal_a.faulty && deterministic;
    std::string detail = fmt("N = %.0e: leak |W|/sigma = %.2f (exact-table expectation %.2f)", leak_a.n_trials,
                             significance(leak_a.mode_i.w, leak_a.mode_i.sigma), expected) +
                         fmt(", ideal %.2f", significance(ideal_a.mode_i.w, ideal_a.mode_i.sigma)) +
                         (deterministic ? ", deterministic" : ", NOT deterministic");
    return {pass, detail};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "null test on 200 random qubit protocols", 10, null_test_qubit},
        {2, "robustness to qubit-confined noise", 5, robustness},
        {3, "classical bound by exhaustive enumeration", 1, classical_bound},
        {4, "qutrit maximum with 64 restarts", 60, qutrit_bound},
        {5, "ideal-protocol sanity identities and cofactor pattern", 0, ideal_structure},
        {6, "analytic vs resampled witness error", 120, error_propagation},
        {7, "p-value anchors at 7.9 and 71 sigma", 0, p_value_anchor},
        {8, "pulse leakage 4|z|^2 and form agreement", 5, leakage_number},
        {9, "three-level ODE vs perturbation theory, DRAG", 30, ode_consistency},
        {10, "leakage-induced witness shift bound", 0, leakage_sensitivity},
        {11, "synthetic qutrit_leak(0.05) flagged at N = 1e7", 60, end_to_end_pipeline},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.time_limit_s == 0 || elapsed < c.time_limit_s;
        bool pass = v.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s  %2d  %-55s %7.2f s  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                    v.detail.c_str(), in_time ? "" : " [time limit exceeded]");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
