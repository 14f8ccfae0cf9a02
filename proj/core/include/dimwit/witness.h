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

#ifndef DIMWIT_WITNESS_H
#define DIMWIT_WITNESS_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace dimwit {

inline constexpr std::size_t kNumExperiments = 11;
inline constexpr std::size_t kNumFirstPrep = 6;   // p_{1,0..5}
inline constexpr std::size_t kNumSecondPrep = 5;  // p_{2,0..4}

/// Preparation i (1 or 2) followed by n repetitions of the operation.
struct ExperimentLabel {
    int prep;
    int reps;
};

/// Canonical experiment order: 1:0..1:5, then 2:0..2:4.
inline constexpr std::array<ExperimentLabel, kNumExperiments> kExperimentLabels = {{
    {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {2, 4},
}};

/// "1:3" style key used in dataset files.
std::string experiment_key(std::size_t index);
/// Index of an "i:n" key in kExperimentLabels, or kNumExperiments if unknown.
std::size_t experiment_index(std::string_view key);

/// The eleven protocol probabilities, all in [0, 1].
struct ProbTable {
    std::array<double, kNumExperiments> values{};

    /// Throws ValidationError unless every entry lies in [0, 1].
    static ProbTable make(const std::array<double, kNumFirstPrep> &p1, const std::array<double, kNumSecondPrep> &p2);
    static ProbTable make(const std::array<double, kNumExperiments> &values);
    void validate() const;

    double p1(std::size_t n) const {
        return values[n];
    }
    double p2(std::size_t n) const {
        return values[kNumFirstPrep + n];
    }
    friend bool operator==(const ProbTable &, const ProbTable &) = default;
};

/// Perturbations of the eleven probabilities; unconstrained.
struct ProbDeltas {
    std::array<double, kNumExperiments> values{};
};

using Matrix5 = std::array<std::array<double, 5>, 5>;

struct MatrixPosition {
    std::size_t row;
    std::size_t col;
};

/// Every (row, col) of the witness matrix holding the given experiment's probability.
std::span<const MatrixPosition> positions_of(std::size_t experiment);

/// The 5x5 witness matrix:
///   p10 p11 p12 p20 p21
///   p11 p12 p13 p21 p22
///   p12 p13 p14 p22 p23
///   p13 p14 p15 p23 p24
///    1   1   1   1   1
Matrix5 assemble_matrix(const ProbTable &t);

/// LU with partial pivoting.
double determinant(const Matrix5 &m);

/// C_ij = (-1)^(i+j) * minor_ij = d det / d m_ij, each minor evaluated directly.
/// The adjugate is the transpose of this matrix.
Matrix5 cofactor_matrix(const Matrix5 &m);

Matrix5 transpose(const Matrix5 &m);

/// W = det of the witness matrix.
double witness_value(const ProbTable &t);

/// dW/dp_a for each experiment: the sum of C_ij over positions_of(a).
std::array<double, kNumExperiments> witness_gradient(const Matrix5 &cofactors);

/// Shot-noise variance of W for n_trials independent repetitions of each experiment:
/// sigma^2 = (1/N) sum_a p_a (1 - p_a) (dW/dp_a)^2.
double variance(const ProbTable &t, std::uint64_t n_trials);

/// Two-sided Gaussian tail probability.
struct PValue {
    /// erfc(|w| / (sqrt(2) sigma)); underflows to 0 beyond roughly 38 sigma.
    double value;
    /// log10 of the same quantity, accurate far beyond the double range.
    double log10_value;
};

/// Throws ValidationError unless sigma > 0.
PValue p_value(double w, double sigma);

/// Natural log of erfc(x), valid for arbitrarily large positive x.
double log_erfc(double x);

/// First-order change of W: sum_a (dW/dp_a) * delta_a.
double first_order_shift(const Matrix5 &cofactors, const ProbDeltas &deltas);

struct WitnessReport {
    double w = 0;
    double sigma = 0;
    PValue p{1, 0};
    Matrix5 cofactors{};
    std::uint64_t n_trials = 1;
};

/// W, sigma, p-value and cofactors for a table measured n_trials times per experiment.
/// Throws ValidationError when every cofactor vanishes: first-order error propagation
/// is meaningless there (e.g. all preparations and the measurement on one Bloch circle).
WitnessReport make_witness_report(const ProbTable &t, std::uint64_t n_trials);

/// p-value with the sigma == 0 convention used in reports: 1 if w == 0, else 0.
PValue report_p_value(double w, double sigma);

}  // namespace dimwit

#endif
