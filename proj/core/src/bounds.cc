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

#include "dimwit/bounds.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "dimwit/error.h"
#include "dimwit/models.h"
#include "dimwit/quantum.h"
#include "dimwit/random.h"
#include "dimwit/simplex.h"

namespace dimwit {

namespace {

std::array<Complex, 3> planar_state(double alpha) {
    return {std::cos(alpha), 0.0, std::sin(alpha)};
}

QutritParams from_vector(std::span<const double> x) {
    return {x[0], x[1], x[2], x[3]};
}

}  // namespace

CMatrix qutrit_rotation(double phi) {
    double c = std::cos(phi);
    double s = std::sin(phi);
    return CMatrix::from_rows({{c, -s, 0}, {s, c, 0}, {0, 0, 1}});
}

ProbTable qutrit_table(const QutritParams &q) {
    CMatrix u = qutrit_rotation(q.phi);
    CMatrix u_inv = u.adjoint();
    CMatrix u4 = matrix_power(u, 4);
    CMatrix u5 = u4 * u;
    CMatrix u4_inv = matrix_power(u_inv, 4);
    CMatrix u5_inv = u4_inv * u_inv;

    auto psi1 = planar_state(q.alpha1);
    auto psi2 = planar_state(q.alpha2);
    auto psi3 = planar_state(q.alpha3);

    ProtocolSpec spec{
        State(u5_inv * CMatrix::outer(psi1) * u5),
        State(u4_inv * CMatrix::outer(psi2) * u4),
        // Kraus operator U^2: the state evolves as U^2 rho U^2dag.
        channel_from_unitary(u * u),
        Effect::projector(psi3),
    };
    return protocol_table(spec);
}

double qutrit_witness(const QutritParams &q) {
    return witness_value(qutrit_table(q));
}

QutritOptimum maximize_qutrit(std::uint64_t seed, int restarts) {
    if (restarts < 1) {
        throw ValidationError("maximize_qutrit: restarts must be >= 1");
    }
    auto objective = [](std::span<const double> x) {
        return -qutrit_witness(from_vector(x));
    };

    QutritOptimum best{{}, -std::numeric_limits<double>::infinity()};
    for (int k = 0; k < restarts; k++) {
        Rng rng(derive_seed(seed, seed_tag::kBoundsRestart, static_cast<std::uint64_t>(k)));
        std::array<double, 4> start{};
        for (double &a : start) {
            a = 2 * std::numbers::pi * uniform01(rng);
        }
        auto result = simplex_minimize(objective, start);
        double value = -result.value;
        if (value > best.value) {
            best = {from_vector(result.x), value};
        }
    }
    return best;
}

ClassicalBound classical_bound_scan() {
    ClassicalBound out{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), {}};
    for (unsigned bits = 0; bits < (1u << kNumExperiments); bits++) {
        ProbTable t;
        for (std::size_t a = 0; a < kNumExperiments; a++) {
            t.values[a] = (bits >> a) & 1u;
        }
        double w = witness_value(t);
        // Integer matrices: round away LU noise before comparing.
        w = std::round(w);
        if (w > out.maximum) {
            out.maximum = w;
            out.argmax.clear();
        }
        if (w == out.maximum) {
            out.argmax.push_back(t);
        }
        out.minimum = std::min(out.minimum, w);
    }
    return out;
}

double verify_classical_bound() {
    return classical_bound_scan().maximum;
}

}  // namespace dimwit
