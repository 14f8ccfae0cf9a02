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

#include "dimwit/witness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "dimwit/error.h"

namespace dimwit {

namespace {

// positions_of table, built once from the matrix layout.
struct PositionTable {
    std::array<std::vector<MatrixPosition>, kNumExperiments> by_experiment;

    PositionTable() {
        for (std::size_t r = 0; r < 4; r++) {
            for (std::size_t c = 0; c < 3; c++) {
                by_experiment[r + c].push_back({r, c});
            }
            for (std::size_t c = 3; c < 5; c++) {
                by_experiment[kNumFirstPrep + r + c - 3].push_back({r, c});
            }
        }
    }
};

const PositionTable &position_table() {
    static const PositionTable table;
    return table;
}

template <std::size_t N>
double lu_determinant(std::array<std::array<double, N>, N> a) {
    double det = 1;
    for (std::size_t k = 0; k < N; k++) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < N; r++) {
            if (std::abs(a[r][k]) > std::abs(a[pivot][k])) {
                pivot = r;
            }
        }
        if (a[pivot][k] == 0) {
            return 0;
        }
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t r = k + 1; r < N; r++) {
            double f = a[r][k] / a[k][k];
            for (std::size_t c = k + 1; c < N; c++) {
                a[r][c] -= f * a[k][c];
            }
        }
    }
    return det;
}

}  // namespace

std::string experiment_key(std::size_t index) {
    const auto &label = kExperimentLabels.at(index);
    return std::to_string(label.prep) + ":" + std::to_string(label.reps);
}

std::size_t experiment_index(std::string_view key) {
    for (std::size_t k = 0; k < kNumExperiments; k++) {
        if (key == experiment_key(k)) {
            return k;
        }
    }
    return kNumExperiments;
}

ProbTable ProbTable::make(const std::array<double, kNumFirstPrep> &p1, const std::array<double, kNumSecondPrep> &p2) {
    ProbTable t;
    std::copy(p1.begin(), p1.end(), t.values.begin());
    std::copy(p2.begin(), p2.end(), t.values.begin() + kNumFirstPrep);
    t.validate();
    return t;
}

ProbTable ProbTable::make(const std::array<double, kNumExperiments> &values) {
    ProbTable t{values};
    t.validate();
    return t;
}

void ProbTable::validate() const {
    for (std::size_t k = 0; k < kNumExperiments; k++) {
        double p = values[k];
        if (!(p >= 0 && p <= 1)) {
            std::ostringstream ss;
            ss << "ProbTable: probability " << experiment_key(k) << " = " << p << " outside [0, 1]";
            throw ValidationError(ss.str());
        }
    }
}

std::span<const MatrixPosition> positions_of(std::size_t experiment) {
    return position_table().by_experiment.at(experiment);
}

Matrix5 assemble_matrix(const ProbTable &t) {
    Matrix5 m{};
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        for (auto pos : positions_of(a)) {
            m[pos.row][pos.col] = t.values[a];
        }
    }
    m[4] = {1, 1, 1, 1, 1};
    return m;
}

double determinant(const Matrix5 &m) {
    return lu_determinant<5>(m);
}

Matrix5 cofactor_matrix(const Matrix5 &m) {
    Matrix5 c{};
    for (std::size_t i = 0; i < 5; i++) {
        for (std::size_t j = 0; j < 5; j++) {
            std::array<std::array<double, 4>, 4> minor{};
            for (std::size_t r = 0, mr = 0; r < 5; r++) {
                if (r == i) {
                    continue;
                }
                for (std::size_t col = 0, mc = 0; col < 5; col++) {
                    if (col == j) {
                        continue;
                    }
                    minor[mr][mc++] = m[r][col];
                }
                mr++;
            }
            double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            c[i][j] = sign * lu_determinant<4>(minor);
        }
    }
    return c;
}

Matrix5 transpose(const Matrix5 &m) {
    Matrix5 t{};
    for (std::size_t i = 0; i < 5; i++) {
        for (std::size_t j = 0; j < 5; j++) {
            t[j][i] = m[i][j];
        }
    }
    return t;
}

double witness_value(const ProbTable &t) {
    return determinant(assemble_matrix(t));
}

std::array<double, kNumExperiments> witness_gradient(const Matrix5 &cofactors) {
    std::array<double, kNumExperiments> g{};
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        for (auto pos : positions_of(a)) {
            g[a] += cofactors[pos.row][pos.col];
        }
    }
    return g;
}

double variance(const ProbTable &t, std::uint64_t n_trials) {
    if (n_trials == 0) {
        throw ValidationError("variance: n_trials must be positive");
    }
    auto g = witness_gradient(cofactor_matrix(assemble_matrix(t)));
    double s = 0;
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        double p = t.values[a];
        s += p * (1 - p) * g[a] * g[a];
    }
    return s / static_cast<double>(n_trials);
}

double log_erfc(double x) {
    if (x < 26) {
        return std::log(std::erfc(x));
    }
    // erfc(x) = exp(-x^2) / sqrt(pi) * 1 / (x + (1/2) / (x + 1 / (x + (3/2) / (x + ...)))).
    double f = x;
    for (int k = 200; k >= 1; k--) {
        f = x + (0.5 * k) / f;
    }
    return -x * x - 0.5 * std::log(std::numbers::pi) - std::log(f);
}

PValue p_value(double w, double sigma) {
    if (!(sigma > 0) || !std::isfinite(sigma)) {
        throw ValidationError("p_value: sigma must be positive and finite");
    }
    double x = std::abs(w) / (std::numbers::sqrt2 * sigma);
    return {std::erfc(x), log_erfc(x) / std::numbers::ln10};
}

PValue report_p_value(double w, double sigma) {
    if (sigma > 0) {
        return p_value(w, sigma);
    }
    if (w == 0) {
        return {1, 0};
    }
    return {0, -std::numeric_limits<double>::infinity()};
}

double first_order_shift(const Matrix5 &cofactors, const ProbDeltas &deltas) {
    auto g = witness_gradient(cofactors);
    double s = 0;
    for (std::size_t a = 0; a < kNumExperiments; a++) {
        s += g[a] * deltas.values[a];
    }
    return s;
}

WitnessReport make_witness_report(const ProbTable &t, std::uint64_t n_trials) {
    t.validate();
    if (n_trials == 0) {
        throw ValidationError("witness report: n_trials must be positive");
    }
    WitnessReport r;
    auto m = assemble_matrix(t);
    r.w = determinant(m);
    r.cofactors = cofactor_matrix(m);
    double largest = 0;
    for (const auto &row : r.cofactors) {
        for (double c : row) {
            largest = std::max(largest, std::abs(c));
        }
    }
    if (largest < 1e-12) {
        throw ValidationError(
            "witness report: all cofactors vanish, first-order error propagation does not apply "
            "(preparations and measurement confined to a single Bloch circle?)");
    }
    r.sigma = std::sqrt(variance(t, n_trials));
    r.p = report_p_value(r.w, r.sigma);
    r.n_trials = n_trials;
    return r;
}

}  // namespace dimwit
