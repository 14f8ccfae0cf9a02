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
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "dimwit/error.h"
#include "test_util.h"

using namespace dimwit;
using namespace dimwit::testing;

namespace {

const QutritOptimum &optimum_64() {
    static const QutritOptimum result = maximize_qutrit(2026, 64);
    return result;
}

}  // namespace

TEST(qutrit_rotation, is_orthogonal_and_periodic) {
    auto u = qutrit_rotation(0.37);
    ASSERT_LT(u.unitarity_defect(), 1e-14);
    ASSERT_LT(max_abs_diff(qutrit_rotation(0), CMatrix::identity(3)), 1e-15);
    ASSERT_LT(max_abs_diff(qutrit_rotation(0.37 + 2 * std::numbers::pi), u), 1e-12);
    ASSERT_EQ(u(2, 2), Complex(1));
}

TEST(qutrit_witness, trivial_rotation_vanishes) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int k = 0; k < 20; k++) {
        QutritParams q{0, angle(rng), angle(rng), angle(rng)};
        ASSERT_NEAR(qutrit_witness(q), 0, 1e-14);
    }
}

TEST(qutrit_witness, matches_laplace_oracle) {
    QutritParams q{0.9, 0.3, 1.7, 2.4};
    auto t = qutrit_table(q);
    ASSERT_NEAR(qutrit_witness(q), laplace_determinant(witness_matrix_by_hand(t)), 1e-14);
}

TEST(qutrit_witness, angles_are_periodic) {
    const double tau = 2 * std::numbers::pi;
    QutritParams q{1.1, 0.4, -0.8, 2.9};
    QutritParams shifted{q.phi, q.alpha1 + tau, q.alpha2 + tau, q.alpha3 + tau};
    ASSERT_NEAR(qutrit_witness(q), qutrit_witness(shifted), 1e-12);
}

TEST(qutrit_witness, random_draws_stay_below_optimum) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int k = 0; k < 1000; k++) {
        QutritParams q{angle(rng), angle(rng), angle(rng), angle(rng)};
        double w = qutrit_witness(q);
        ASSERT_LE(w, kQutritWitnessMaximum + 1e-9);
        ASSERT_GE(w, -kQutritWitnessMaximum - 1e-9);
    }
}

TEST(maximize_qutrit, reaches_known_maximum) {
    const auto &opt = optimum_64();
    ASSERT_NEAR(opt.value, kQutritWitnessMaximum, 1e-7);
    ASSERT_LE(opt.value, kClassicalWitnessMaximum);
    ASSERT_EQ(opt.value, qutrit_witness(opt.params));
}

TEST(maximize_qutrit, optimum_is_stationary) {
    const auto &opt = optimum_64();
    const double h = 1e-5;
    double norm2 = 0;
    for (int k = 0; k < 4; k++) {
        QutritParams up = opt.params;
        QutritParams down = opt.params;
        double *pu = k == 0 ? &up.phi : k == 1 ? &up.alpha1 : k == 2 ? &up.alpha2 : &up.alpha3;
        double *pd = k == 0 ? &down.phi : k == 1 ? &down.alpha1 : k == 2 ? &down.alpha2 : &down.alpha3;
        *pu += h;
        *pd -= h;
        double g = (qutrit_witness(up) - qutrit_witness(down)) / (2 * h);
        norm2 += g * g;
    }
    ASSERT_LT(std::sqrt(norm2), 1e-5);
}

TEST(maximize_qutrit, monotone_in_restarts) {
    auto one = maximize_qutrit(2026, 1);
    ASSERT_GE(optimum_64().value, one.value);
}

TEST(maximize_qutrit, deterministic) {
    auto a = maximize_qutrit(99, 4);
    auto b = maximize_qutrit(99, 4);
    ASSERT_EQ(a.value, b.value);
    ASSERT_EQ(a.params.phi, b.params.phi);
    ASSERT_EQ(a.params.alpha1, b.params.alpha1);
    ASSERT_EQ(a.params.alpha2, b.params.alpha2);
    ASSERT_EQ(a.params.alpha3, b.params.alpha3);
}

TEST(maximize_qutrit, rejects_zero_restarts) {
    ASSERT_THROW(maximize_qutrit(1, 0), ValidationError);
}

TEST(classical_bound_scan, extremes_and_argmax) {
    auto scan = classical_bound_scan();
    ASSERT_EQ(scan.maximum, 3);
    // Swapping rows leaves the shifted-table family, so the range is not symmetric.
    ASSERT_EQ(scan.minimum, -2);
    ASSERT_EQ(verify_classical_bound(), 3);

    // p10, p12, p13, p15, p20, p24 = 1, rest 0.
    std::array<double, 11> extremal = {1, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1};
    bool found = false;
    for (const auto &t : scan.argmax) {
        ASSERT_NEAR(witness_value(t), 3, 1e-12);
        found = found || t.values == extremal;
    }
    ASSERT_TRUE(found);
}

TEST(classical_bound_scan, agrees_with_laplace_enumeration) {
    // Independent oracle: integer Laplace expansion over every bit pattern.
    double best = -100;
    double worst = 100;
    for (unsigned bits = 0; bits < (1u << 11); bits++) {
        ProbTable t;
        for (std::size_t a = 0; a < kNumExperiments; a++) {
            t.values[a] = (bits >> a) & 1;
        }
        double w = laplace_determinant(witness_matrix_by_hand(t));
        best = std::max(best, w);
        worst = std::min(worst, w);
    }
    ASSERT_EQ(best, 3);
    ASSERT_EQ(worst, -2);
}
