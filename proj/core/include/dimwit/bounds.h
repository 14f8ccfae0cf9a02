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

#ifndef DIMWIT_BOUNDS_H
#define DIMWIT_BOUNDS_H

#include <cstdint>
#include <vector>

#include "dimwit/linalg.h"
#include "dimwit/witness.h"

namespace dimwit {

/// Best known W in quantum dimension 3.
inline constexpr double kQutritWitnessMaximum = 0.5259128034146499;
/// Maximal determinant of the witness matrix over 0/1 entries.
inline constexpr double kClassicalWitnessMaximum = 3.0;

/// Four-angle qutrit family: U(phi) rotates the |1>,|2> plane and fixes |3>;
/// psi_i = cos(alpha_i)|1> + sin(alpha_i)|3>.
struct QutritParams {
    double phi = 0;
    double alpha1 = 0;
    double alpha2 = 0;
    double alpha3 = 0;
};

CMatrix qutrit_rotation(double phi);

/// Preparations U^-5|psi1><psi1|U^5 and U^-4|psi2><psi2|U^4, measurement |psi3><psi3|,
/// repeated operation U^2 acting on the state (M -> U^2dag M U^2 on effects).
ProbTable qutrit_table(const QutritParams &q);
double qutrit_witness(const QutritParams &q);

struct QutritOptimum {
    QutritParams params;
    double value;
};

/// Multi-start simplex ascent of qutrit_witness; restart k starts from a uniform
/// point of [0, 2pi)^4 drawn from a generator seeded by (seed, k). Deterministic.
QutritOptimum maximize_qutrit(std::uint64_t seed, int restarts);

struct ClassicalBound {
    double maximum;
    double minimum;
    /// Every 0/1 table attaining the maximum.
    std::vector<ProbTable> argmax;
};

/// Exhaustive scan over all 2^11 deterministic tables.
ClassicalBound classical_bound_scan();
/// Maximum of the scan.
double verify_classical_bound();

}  // namespace dimwit

#endif
