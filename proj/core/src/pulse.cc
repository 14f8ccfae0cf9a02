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

#include "dimwit/pulse.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dimwit/error.h"
#include "dimwit/quadrature.h"

namespace dimwit {

using cd = std::complex<double>;

namespace {

constexpr cd kI{0, 1};

struct PulseShape {
    double half_window;
    double sigma;
    double pedestal;  // exp(-T^2 / 8 sigma^2)
    double scale;     // (pi/2) / norm

    explicit PulseShape(const PulseParams &p) {
        p.validate();
        double t = p.gate_time();
        sigma = p.width();
        half_window = t / 2;
        pedestal = std::exp(-t * t / (8 * sigma * sigma));
        double norm = std::sqrt(2 * std::numbers::pi) * sigma * std::erf(t / (2 * std::numbers::sqrt2 * sigma)) -
                      t * pedestal;
        scale = (std::numbers::pi / 2) / norm;
    }

    double omega(double t) const {
        return scale * (std::exp(-t * t / (2 * sigma * sigma)) - pedestal);
    }
    double omega_dot(double t) const {
        return scale * (-t / (sigma * sigma)) * std::exp(-t * t / (2 * sigma * sigma));
    }
    double phi(double t) const {
        double r = std::numbers::sqrt2 * sigma;
        double gauss = sigma * std::sqrt(std::numbers::pi / 2) * (std::erf(t / r) + std::erf(half_window / r));
        return scale * (gauss - (t + half_window) * pedestal);
    }
    void check_window(double t, const char *what) const {
        if (!(std::abs(t) <= half_window * (1 + 1e-12))) {
            std::ostringstream ss;
            ss << what << ": t = " << t << " ns outside the pulse window [" << -half_window << ", " << half_window
               << "]";
            throw ValidationError(ss.str());
        }
    }
};

using Ket3 = std::array<cd, 3>;

struct ThreeLevelSystem {
    PulseShape shape;
    double delta;
    double lambda;
    bool drag;
    double amplitude;

    Ket3 derivative(double t, const Ket3 &psi) const {
        cd om = shape.omega(t);
        if (drag) {
            om -= kI * (lambda * lambda * shape.omega_dot(t) / (4 * delta));
        }
        om *= amplitude;
        // H = [[0, conj(om), 0], [om, 0, lambda conj(om)], [0, lambda om, delta]]
        Ket3 h_psi = {
            std::conj(om) * psi[1],
            om * psi[0] + lambda * std::conj(om) * psi[2],
            lambda * om * psi[1] + delta * psi[2],
        };
        return {-kI * h_psi[0], -kI * h_psi[1], -kI * h_psi[2]};
    }

    // Returns the final state; tracks the worst norm drift.
    Ket3 integrate(Ket3 psi, long steps, double &max_drift) const {
        double t0 = -shape.half_window;
        double h = 2 * shape.half_window / static_cast<double>(steps);
        auto axpy = [](const Ket3 &y, double s, const Ket3 &k) {
            return Ket3{y[0] + s * k[0], y[1] + s * k[1], y[2] + s * k[2]};
        };
        for (long n = 0; n < steps; n++) {
            double t = t0 + static_cast<double>(n) * h;
            Ket3 k1 = derivative(t, psi);
            Ket3 k2 = derivative(t + h / 2, axpy(psi, h / 2, k1));
            Ket3 k3 = derivative(t + h / 2, axpy(psi, h / 2, k2));
            Ket3 k4 = derivative(t + h, axpy(psi, h, k3));
            for (int c = 0; c < 3; c++) {
                psi[c] += h / 6 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
            }
            double norm2 = std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]);
            max_drift = std::max(max_drift, std::abs(norm2 - 1));
        }
        return psi;
    }
};

}  // namespace

void PulseParams::validate() const {
    if (n_t <= 0 || n_sigma <= 0) {
        throw ValidationError("PulseParams: n_t and n_sigma must be positive");
    }
    if (!(delta_t > 0) || !std::isfinite(delta_t)) {
        throw ValidationError("PulseParams: delta_t must be positive");
    }
    if (!(lambda > 0) || !std::isfinite(lambda)) {
        throw ValidationError("PulseParams: lambda must be positive");
    }
    if (!std::isfinite(nu) || nu == 0) {
        throw ValidationError("PulseParams: nu must be finite and nonzero");
    }
}

double omega_g(double t, const PulseParams &p) {
    PulseShape shape(p);
    shape.check_window(t, "omega_g");
    if (std::abs(t) >= shape.half_window) {
        return 0;
    }
    return shape.omega(t);
}

double omega_g_dot(double t, const PulseParams &p) {
    PulseShape shape(p);
    shape.check_window(t, "omega_g_dot");
    return shape.omega_dot(t);
}

double phi_of_t(double t, const PulseParams &p) {
    PulseShape shape(p);
    shape.check_window(t, "phi_of_t");
    return shape.phi(std::clamp(t, -shape.half_window, shape.half_window));
}

LeakAmplitude leak_amplitude_z(const PulseParams &p, double abs_tol) {
    PulseShape shape(p);
    double delta = p.anharmonicity();
    double a = -shape.half_window;
    double b = shape.half_window;

    auto direct = adaptive_simpson(
        [&](double t) {
            return std::exp(kI * (delta * t)) * (shape.omega(t) * std::cos(shape.phi(t)));
        },
        a, b, abs_tol);
    // The by-parts form subtracts two O(1) terms, so its integral needs |Delta| times more accuracy.
    auto tail = adaptive_simpson(
        [&](double t) {
            return std::exp(kI * (delta * t)) * std::sin(shape.phi(t));
        },
        a, b, abs_tol / std::max(1.0, std::abs(delta)));
    if (!direct.converged || !tail.converged) {
        std::ostringstream ss;
        ss << "leak_amplitude_z: quadrature did not converge (error estimates " << direct.error_estimate << ", "
           << tail.error_estimate << ")";
        throw NumericalError(ss.str());
    }

    LeakAmplitude out;
    out.z = direct.value;
    out.z_by_parts = std::exp(kI * (delta * b)) - kI * delta * tail.value;
    out.relative_gap = std::abs(out.z - out.z_by_parts) / std::abs(out.z);
    out.error_estimate = direct.error_estimate;
    if (!(out.relative_gap <= 1e-8)) {
        std::ostringstream ss;
        ss << "leak_amplitude_z: direct and integrated-by-parts forms disagree (relative gap " << out.relative_gap
           << ")";
        throw NumericalError(ss.str());
    }
    return out;
}

double leak_probability(cd psi0, cd psi1, cd z) {
    double n2 = std::norm(psi0) + std::norm(psi1);
    if (!(std::abs(n2 - 1) <= 1e-10)) {
        std::ostringstream ss;
        ss << "leak_probability: state not normalized (|psi|^2 = " << n2 << ")";
        throw ValidationError(ss.str());
    }
    return 2 * std::norm(z * psi1 - kI * std::conj(z) * psi0);
}

double max_leak_probability(cd z) {
    return 4 * std::norm(z);
}

std::array<cd, 2> maximal_leak_state(cd z) {
    if (z == cd{}) {
        return {cd{1}, cd{0}};
    }
    cd ratio = kI * z / std::conj(z);
    double s = 1 / std::numbers::sqrt2;
    return {ratio * s, cd{s}};
}

std::array<cd, 2> half_phase_leak_state(cd z) {
    if (z == cd{}) {
        return {cd{1}, cd{0}};
    }
    cd ratio = kI * std::sqrt(z / std::conj(z));
    double s = 1 / std::numbers::sqrt2;
    return {ratio * s, cd{s}};
}

double global_phase_theta(const PulseParams &p) {
    PulseShape shape(p);
    auto q = adaptive_simpson(
        [&](double t) {
            double om = shape.omega(t);
            return om * om;
        },
        -shape.half_window, shape.half_window, 1e-14);
    return q.value * p.lambda * p.lambda / (2 * p.anharmonicity());
}

ThreeLevelResult simulate_three_level(const PulseParams &p, const std::array<cd, 3> &psi_init,
                                      const ThreeLevelOptions &options) {
    double n2 = std::norm(psi_init[0]) + std::norm(psi_init[1]) + std::norm(psi_init[2]);
    if (!(std::abs(n2 - 1) <= 1e-10)) {
        throw ValidationError("simulate_three_level: initial state not normalized");
    }
    if (options.substeps <= 0) {
        throw ValidationError("simulate_three_level: substeps must be positive");
    }
    ThreeLevelSystem system{PulseShape(p), p.anharmonicity(), p.lambda, options.drag, options.amplitude_scale};
    long steps = static_cast<long>(p.n_t) * options.substeps;

    ThreeLevelResult out{};
    double drift_fine = 0;
    Ket3 coarse = system.integrate(psi_init, steps, out.max_norm_drift);
    Ket3 fine = system.integrate(psi_init, 2 * steps, drift_fine);
    out.psi = coarse;
    for (int c = 0; c < 3; c++) {
        out.richardson_error = std::max(out.richardson_error, std::abs(coarse[c] - fine[c]) / 15);
    }
    if (!(out.max_norm_drift <= 1e-9)) {
        std::ostringstream ss;
        ss << "simulate_three_level: norm drift " << out.max_norm_drift << " exceeds 1e-9; use more substeps";
        throw NumericalError(ss.str());
    }
    return out;
}

}  // namespace dimwit
