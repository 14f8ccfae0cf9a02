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

#ifndef DIMWIT_TESTS_TEST_UTIL_H
#define DIMWIT_TESTS_TEST_UTIL_H

// Random generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls the witness, variance or pulse code under test.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "dimwit/linalg.h"
#include "dimwit/quantum.h"
#include "dimwit/witness.h"

namespace dimwit::testing {

using Complex = std::complex<double>;

inline Complex gaussian_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    return {g(rng), g(rng)};
}

inline CMatrix gaussian_matrix(std::size_t d, std::mt19937_64 &rng) {
    std::vector<Complex> e(d * d);
    for (auto &z : e) {
        z = gaussian_complex(rng);
    }
    return CMatrix(d, std::move(e));
}

/// Haar-like unitary via Gram-Schmidt on Gaussian columns.
inline CMatrix random_unitary(std::size_t d, std::mt19937_64 &rng) {
    CMatrix g = gaussian_matrix(d, rng);
    CMatrix q(d);
    for (std::size_t c = 0; c < d; c++) {
        std::vector<Complex> v(d);
        for (std::size_t r = 0; r < d; r++) {
            v[r] = g(r, c);
        }
        for (std::size_t prev = 0; prev < c; prev++) {
            Complex dot = 0;
            for (std::size_t r = 0; r < d; r++) {
                dot += std::conj(q(r, prev)) * v[r];
            }
            for (std::size_t r = 0; r < d; r++) {
                v[r] -= dot * q(r, prev);
            }
        }
        double n = 0;
        for (auto &z : v) {
            n += std::norm(z);
        }
        n = std::sqrt(n);
        for (std::size_t r = 0; r < d; r++) {
            q(r, c) = v[r] / n;
        }
    }
    return q;
}

inline CMatrix random_hermitian(std::size_t d, std::mt19937_64 &rng) {
    CMatrix g = gaussian_matrix(d, rng);
    return (g + g.adjoint()) * Complex(0.5);
}

/// Mixed state G G^dag / Tr.
inline State random_state(std::size_t d, std::mt19937_64 &rng) {
    CMatrix g = gaussian_matrix(d, rng);
    CMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    // Exact Hermitian symmetrization against rounding.
    return State((rho + rho.adjoint()) * Complex(0.5));
}

/// V diag(u) V^dag with u uniform in [0, 1].
inline Effect random_effect(std::size_t d, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    CMatrix v = random_unitary(d, rng);
    std::vector<Complex> diag(d);
    for (auto &x : diag) {
        x = u(rng);
    }
    CMatrix m = v * CMatrix::diagonal(diag) * v.adjoint();
    return Effect((m + m.adjoint()) * Complex(0.5));
}

/// Random CPTP map with `rank` Kraus operators: K_j = G_j S^{-1/2}, S = sum G^dag G.
inline Channel random_channel(std::size_t d, std::size_t rank, std::mt19937_64 &rng) {
    std::vector<CMatrix> g;
    CMatrix s(d);
    for (std::size_t k = 0; k < rank; k++) {
        g.push_back(gaussian_matrix(d, rng));
        s += g.back().adjoint() * g.back();
    }
    auto eig = hermitian_eigen((s + s.adjoint()) * Complex(0.5));
    std::vector<Complex> inv_sqrt(d);
    for (std::size_t k = 0; k < d; k++) {
        inv_sqrt[k] = 1 / std::sqrt(eig.values[k]);
    }
    CMatrix s_inv_half = eig.vectors * CMatrix::diagonal(inv_sqrt) * eig.vectors.adjoint();
    std::vector<CMatrix> kraus;
    for (auto &gk : g) {
        kraus.push_back(gk * s_inv_half);
    }
    return Channel(std::move(kraus));
}

/// Laplace expansion along the first row; exponential cost, fine for n <= 6.
inline double laplace_determinant(const std::vector<std::vector<double>> &m) {
    std::size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    double det = 0;
    for (std::size_t c = 0; c < n; c++) {
        std::vector<std::vector<double>> minor;
        for (std::size_t r = 1; r < n; r++) {
            std::vector<double> row;
            for (std::size_t k = 0; k < n; k++) {
                if (k != c) {
                    row.push_back(m[r][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        det += (c % 2 == 0 ? 1 : -1) * m[0][c] * laplace_determinant(minor);
    }
    return det;
}

inline double laplace_determinant(const Matrix5 &m) {
    std::vector<std::vector<double>> v(5, std::vector<double>(5));
    for (std::size_t r = 0; r < 5; r++) {
        for (std::size_t c = 0; c < 5; c++) {
            v[r][c] = m[r][c];
        }
    }
    return laplace_determinant(v);
}

/// The witness matrix written out entry by entry.
inline Matrix5 witness_matrix_by_hand(const ProbTable &t) {
    auto p1 = [&](int n) { return t.values[n]; };
    auto p2 = [&](int n) { return t.values[6 + n]; };
    return {{
        {p1(0), p1(1), p1(2), p2(0), p2(1)},
        {p1(1), p1(2), p1(3), p2(1), p2(2)},
        {p1(2), p1(3), p1(4), p2(2), p2(3)},
        {p1(3), p1(4), p1(5), p2(3), p2(4)},
        {1, 1, 1, 1, 1},
    }};
}

/// Central finite difference of det with respect to entry (i, j).
inline double det_partial(Matrix5 m, std::size_t i, std::size_t j, double h = 1e-6) {
    double x = m[i][j];
    m[i][j] = x + h;
    double up = laplace_determinant(m);
    m[i][j] = x - h;
    double down = laplace_determinant(m);
    return (up - down) / (2 * h);
}

/// erfc by the Maclaurin series of erf (x <= 2) or the Laplace continued fraction.
inline double erfc_oracle(double x) {
    const double pi = 3.14159265358979323846;
    if (x <= 2) {
        double term = x;
        double sum = x;
        for (int n = 1; n < 200; n++) {
            term *= -x * x / n;
            sum += term / (2 * n + 1);
        }
        return 1 - 2 / std::sqrt(pi) * sum;
    }
    double f = x;
    for (int k = 400; k >= 1; k--) {
        f = x + (0.5 * k) / f;
    }
    return std::exp(-x * x) / std::sqrt(pi) / f;
}

inline ProbTable random_table(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    ProbTable t;
    for (auto &p : t.values) {
        p = u(rng);
    }
    return t;
}

}  // namespace dimwit::testing

#endif
