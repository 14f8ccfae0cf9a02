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

#ifndef DIMWIT_PULSE_H
#define DIMWIT_PULSE_H

#include <array>
#include <complex>
#include <numbers>

namespace dimwit {

/// Truncated Gaussian drive of a three-level anharmonic transmon.
/// Times in ns, frequencies in GHz, angular rates in rad/ns.
struct PulseParams {
    int n_t = 256;
    int n_sigma = 64;
    double delta_t = 0.222;
    double nu = -0.310;
    double lambda = std::numbers::sqrt2;

    /// Throws ValidationError on non-positive sizes, steps or lambda.
    void validate() const;
    /// T = n_t * delta_t.
    double gate_time() const {
        return n_t * delta_t;
    }
    /// sigma = n_sigma * delta_t.
    double width() const {
        return n_sigma * delta_t;
    }
    /// Delta = 2 pi nu.
    double anharmonicity() const {
        return 2 * std::numbers::pi * nu;
    }
};

/// (pi/2) [exp(-t^2/2sigma^2) - exp(-T^2/8sigma^2)] / norm on [-T/2, T/2], with norm
/// chosen so the pulse area is pi/2. Throws ValidationError outside the window.
double omega_g(double t, const PulseParams &p);
/// Analytic time derivative of omega_g.
double omega_g_dot(double t, const PulseParams &p);

/// Accumulated rotation angle, integral of omega_g from -T/2 to t (closed form).
double phi_of_t(double t, const PulseParams &p);

struct LeakAmplitude {
    /// Integral of e^{i Delta t} omega_g cos(phi) over the pulse.
    std::complex<double> z;
    /// e^{i Delta T/2} - i Delta * integral of e^{i Delta t} sin(phi).
    std::complex<double> z_by_parts;
    double relative_gap;
    double error_estimate;
};

/// Throws NumericalError if the quadrature does not converge or the two forms
/// disagree by more than 1e-8 relative.
LeakAmplitude leak_amplitude_z(const PulseParams &p, double abs_tol = 1e-14);

/// Perturbative leak 2 |z psi1 - i conj(z) psi0|^2 from psi0|0> + psi1|1>.
/// Throws ValidationError unless |psi0|^2 + |psi1|^2 = 1 within 1e-10.
double leak_probability(std::complex<double> psi0, std::complex<double> psi1, std::complex<double> z);

/// 4 |z|^2, the largest value of leak_probability.
double max_leak_probability(std::complex<double> z);

/// Normalized (psi0, psi1) with psi0/psi1 = i z / conj(z), which attains 4 |z|^2.
std::array<std::complex<double>, 2> maximal_leak_state(std::complex<double> z);

/// Normalized (psi0, psi1) with psi0/psi1 = i sqrt(z / conj(z)). Reaches only
/// 2 |z|^2 (1 + cos arg z); kept for comparison with that closed form.
std::array<std::complex<double>, 2> half_phase_leak_state(std::complex<double> z);

/// Global phase lambda^2 * integral of omega_g^2 / (2 Delta).
double global_phase_theta(const PulseParams &p);

struct ThreeLevelOptions {
    /// Add the derivative correction -i lambda^2 d(omega_g)/dt / (4 Delta).
    bool drag = false;
    /// Multiplies the whole drive; 0 switches the pulse off.
    double amplitude_scale = 1.0;
    /// RK4 steps per sampling interval delta_t.
    int substeps = 50;
};

struct ThreeLevelResult {
    std::array<std::complex<double>, 3> psi;
    /// max over steps of | |psi|^2 - 1 |.
    double max_norm_drift;
    /// Largest component difference between step h and h/2 runs, divided by 15.
    double richardson_error;
};

/// RK4 integration of i dpsi/dt = H psi over [-T/2, T/2] with
/// H = Omega (|1><0| + lambda |2><1|) + h.c. + Delta |2><2|.
/// Throws NumericalError if the norm drifts by more than 1e-9.
ThreeLevelResult simulate_three_level(const PulseParams &p,
                                      const std::array<std::complex<double>, 3> &psi_init,
                                      const ThreeLevelOptions &options = {});

}  // namespace dimwit

#endif
