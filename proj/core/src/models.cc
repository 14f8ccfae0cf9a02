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

#include "dimwit/models.h"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dimwit/error.h"

namespace dimwit {

namespace {

constexpr Complex kI{0, 1};

CMatrix embed_qubit_in_qutrit(const CMatrix &m, Complex level2) {
    CMatrix out(3);
    for (std::size_t r = 0; r < 2; r++) {
        for (std::size_t c = 0; c < 2; c++) {
            out(r, c) = m(r, c);
        }
    }
    out(2, 2) = level2;
    return out;
}

CMatrix measurement_frame(MeasurementReading reading) {
    switch (reading) {
        case MeasurementReading::kLeftFactor:
            return gate_set(-std::numbers::pi / 4).s_theta;
        case MeasurementReading::kRightAdjoint:
            return gate_set(std::numbers::pi / 4).s_theta.adjoint();
    }
    throw ValidationError("unknown measurement reading");
}

}  // namespace

GateSet gate_set(double theta) {
    if (!std::isfinite(theta)) {
        throw ValidationError("gate_set: theta must be finite");
    }
    double h = 1 / std::numbers::sqrt2;
    CMatrix s = CMatrix::from_rows({{h, -kI * h}, {-kI * h, h}});
    CMatrix z = CMatrix::from_rows({{std::exp(-kI * (theta / 2)), 0}, {0, std::exp(kI * (theta / 2))}});
    CMatrix s_theta = z.adjoint() * s * z;
    return {std::move(s), std::move(z), std::move(s_theta)};
}

void validate(const ProtocolSpec &spec) {
    std::size_t d = spec.op.dim();
    if (spec.prep1.dim() != d || spec.prep2.dim() != d || spec.meas.dim() != d) {
        throw ValidationError("ProtocolSpec: preparations, operation and measurement must share one dimension");
    }
}

ProtocolSpec ideal_protocol(MeasurementReading reading) {
    GateSet g = gate_set(std::numbers::pi / 2);
    CMatrix one = CMatrix::basis_projector(2, 1);
    CMatrix v = measurement_frame(reading);
    return ProtocolSpec{
        State(one),
        State(g.s_theta * one * g.s_theta.adjoint()),
        channel_from_unitary(g.s),
        Effect(v * CMatrix::basis_projector(2, 0) * v.adjoint()),
    };
}

std::string_view noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::kAmplitudeDamping:
            return "amplitude_damping";
        case NoiseKind::kDephasing:
            return "dephasing";
        case NoiseKind::kOverRotation:
            return "over_rotation";
        case NoiseKind::kZDrift:
            return "z_drift";
        case NoiseKind::kQutritLeak:
            return "qutrit_leak";
    }
    return "?";
}

NoiseKind parse_noise_kind(std::string_view name) {
    for (auto kind : {NoiseKind::kAmplitudeDamping, NoiseKind::kDephasing, NoiseKind::kOverRotation,
                      NoiseKind::kZDrift, NoiseKind::kQutritLeak}) {
        if (noise_kind_name(kind) == name) {
            return kind;
        }
    }
    throw ValidationError("unknown noise kind '" + std::string(name) + "'");
}

void validate(const NoiseConfig &cfg) {
    if (!std::isfinite(cfg.strength) || cfg.strength < 0) {
        throw ValidationError("NoiseConfig: strength must be finite and >= 0");
    }
    if ((cfg.kind == NoiseKind::kAmplitudeDamping || cfg.kind == NoiseKind::kDephasing) && cfg.strength > 1) {
        std::ostringstream ss;
        ss << "NoiseConfig: " << noise_kind_name(cfg.kind) << " strength " << cfg.strength << " outside [0, 1]";
        throw ValidationError(ss.str());
    }
}

ProtocolSpec noisy_protocol(const NoiseConfig &cfg, MeasurementReading reading) {
    validate(cfg);
    ProtocolSpec ideal = ideal_protocol(reading);
    const CMatrix s = gate_set(0).s;
    double x = cfg.strength;

    switch (cfg.kind) {
        case NoiseKind::kAmplitudeDamping: {
            CMatrix e0 = CMatrix::from_rows({{1, 0}, {0, std::sqrt(1 - x)}});
            CMatrix e1 = CMatrix::from_rows({{0, std::sqrt(x)}, {0, 0}});
            ideal.op = Channel({e0 * s, e1 * s});
            return ideal;
        }
        case NoiseKind::kDephasing: {
            CMatrix e0 = CMatrix::identity(2) * std::sqrt(1 - x);
            CMatrix e1 = CMatrix::from_rows({{std::sqrt(x), 0}, {0, -std::sqrt(x)}});
            ideal.op = Channel({e0 * s, e1 * s});
            return ideal;
        }
        case NoiseKind::kOverRotation: {
            // exp(-i (pi/2 + x) sigma_x / 2); x = 0 gives S.
            double half = (std::numbers::pi / 2 + x) / 2;
            CMatrix r = CMatrix::from_rows({{std::cos(half), -kI * std::sin(half)}, {-kI * std::sin(half), std::cos(half)}});
            ideal.op = channel_from_unitary(r);
            return ideal;
        }
        case NoiseKind::kZDrift: {
            ideal.op = channel_from_unitary(gate_set(x).z * s);
            return ideal;
        }
        case NoiseKind::kQutritLeak: {
            CMatrix rot = CMatrix::from_rows({{1, 0, 0}, {0, std::cos(x), -std::sin(x)}, {0, std::sin(x), std::cos(x)}});
            CMatrix gate = rot * embed_qubit_in_qutrit(s, 1);
            return ProtocolSpec{
                State(embed_qubit_in_qutrit(ideal.prep1.rho(), 0)),
                State(embed_qubit_in_qutrit(ideal.prep2.rho(), 0)),
                channel_from_unitary(gate),
                Effect(embed_qubit_in_qutrit(ideal.meas.m(), 0)),
            };
        }
    }
    throw ValidationError("noisy_protocol: unknown noise kind");
}

ProtocolProbabilities protocol_probabilities(const ProtocolSpec &spec) {
    validate(spec);
    ProtocolProbabilities out;
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        const auto &label = kExperimentLabels[a];
        const State &prep = label.prep == 1 ? spec.prep1 : spec.prep2;
        auto p = sequence_probability(prep, spec.op, static_cast<unsigned>(label.reps), spec.meas);
        out.out_of_range |= p.out_of_range;
        out.table.values[a] = p.value;
    }
    out.table.validate();
    return out;
}

ProbTable protocol_table(const ProtocolSpec &spec) {
    return protocol_probabilities(spec).table;
}

CMatrix classical_shift_dim9() {
    CMatrix shift(9);
    for (std::size_t k = 0; k < 9; k++) {
        shift((k + 1) % 9, k) = 1;
    }
    return shift;
}

ProbTable classical_dim9() {
    // 1-based state labels from the construction, stored 0-based.
    constexpr std::size_t kFirstPrep = 5;
    constexpr std::size_t kSecondPrep = 1;
    constexpr std::array<std::size_t, 4> kMeasured = {1, 5, 7, 8};

    CMatrix meas(9);
    for (std::size_t k : kMeasured) {
        meas(k - 1, k - 1) = 1;
    }
    ProtocolSpec spec{
        State::basis(9, kFirstPrep - 1),
        State::basis(9, kSecondPrep - 1),
        channel_from_unitary(classical_shift_dim9()),
        Effect(meas),
    };
    return protocol_table(spec);
}

}  // namespace dimwit
