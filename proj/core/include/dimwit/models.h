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

#ifndef DIMWIT_MODELS_H
#define DIMWIT_MODELS_H

#include <string>
#include <string_view>

#include "dimwit/linalg.h"
#include "dimwit/quantum.h"
#include "dimwit/witness.h"

namespace dimwit {

struct GateSet {
    /// pi/2 Bloch rotation (1/sqrt2) [[1, -i], [-i, 1]].
    CMatrix s;
    /// Phase gate diag(e^{-i theta/2}, e^{i theta/2}).
    CMatrix z;
    /// Rotated-axis gate Z^dag S Z.
    CMatrix s_theta;
};

GateSet gate_set(double theta);

/// Two preparations, a repeated operation, and one measurement.
struct ProtocolSpec {
    State prep1;
    State prep2;
    Channel op;
    Effect meas;
    unsigned max_n1 = 5;
    unsigned max_n2 = 4;
};

/// Throws ValidationError if dimensions disagree.
void validate(const ProtocolSpec &spec);

/// How the measurement "S_{-pi/4} |0><0| S_{pi/4}" is turned into a
/// Hermitian projector V|0><0|V^dag.
enum class MeasurementReading {
    kLeftFactor,    // V = S_{-pi/4}
    kRightAdjoint,  // V = S_{pi/4}^dag
};

/// |1><1| and S_{pi/2}|1><1|S_{pi/2}^dag, operation M -> S^dag M S.
ProtocolSpec ideal_protocol(MeasurementReading reading = MeasurementReading::kLeftFactor);

enum class NoiseKind {
    kAmplitudeDamping,
    kDephasing,
    kOverRotation,
    kZDrift,
    kQutritLeak,
};

std::string_view noise_kind_name(NoiseKind kind);
/// Throws ValidationError for unknown names.
NoiseKind parse_noise_kind(std::string_view name);

struct NoiseConfig {
    NoiseKind kind;
    /// Probability for damping/dephasing, radians for the rotation kinds.
    double strength;
};

void validate(const NoiseConfig &cfg);

/// The ideal protocol with the noise applied after every S gate (Schrodinger picture).
/// kQutritLeak embeds everything in a qutrit and mixes levels 1 and 2 by a real rotation.
ProtocolSpec noisy_protocol(const NoiseConfig &cfg, MeasurementReading reading = MeasurementReading::kLeftFactor);

struct ProtocolProbabilities {
    ProbTable table;
    /// True when any raw probability fell outside the rounding window of [0, 1].
    bool out_of_range = false;
};

/// Evaluates the eleven sequence probabilities.
ProtocolProbabilities protocol_probabilities(const ProtocolSpec &spec);
ProbTable protocol_table(const ProtocolSpec &spec);

/// Cyclic shift |k> -> |k+1 mod 9> on nine classical states (0-based storage).
CMatrix classical_shift_dim9();

/// Deterministic dimension-9 system: shift by one, preparations at states 5 and 1,
/// measurement projecting on {1, 5, 7, 8} (1-based labels). Simulated explicitly.
ProbTable classical_dim9();

}  // namespace dimwit

#endif
