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

#include "dimwit/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dimwit/error.h"

namespace dimwit {

CMatrix::CMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) {
        throw ValidationError("CMatrix: dimension must be positive");
    }
    if (entries_.size() != dim_ * dim_) {
        std::ostringstream ss;
        ss << "CMatrix: expected " << dim_ * dim_ << " entries for dim " << dim_ << ", got " << entries_.size();
        throw ValidationError(ss.str());
    }
    if (!all_finite()) {
        throw ValidationError("CMatrix: non-finite entry");
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t k = 0; k < dim; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
    CMatrix m(diag.size());
    for (std::size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::size_t dim = rows.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto &row : rows) {
        if (row.size() != dim) {
            throw ValidationError("CMatrix::from_rows: matrix must be square");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return CMatrix(dim, std::move(entries));
}

CMatrix CMatrix::outer(std::span<const Complex> v) {
    CMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); r++) {
        for (std::size_t c = 0; c < v.size(); c++) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

CMatrix CMatrix::basis_projector(std::size_t dim, std::size_t k) {
    CMatrix m(dim);
    m(k, k) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Complex CMatrix::trace() const {
    Complex t = 0;
    for (std::size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

bool CMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double CMatrix::hermiticity_defect() const {
    double worst = 0;
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

double CMatrix::unitarity_defect() const {
    return max_abs_diff(adjoint() * *this, identity(dim_));
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (other.dim_ != dim_) {
        throw ValidationError("CMatrix: dimension mismatch in addition");
    }
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (other.dim_ != dim_) {
        throw ValidationError("CMatrix: dimension mismatch in subtraction");
    }
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw ValidationError("CMatrix: dimension mismatch in product");
    }
    std::size_t d = a.dim_;
    CMatrix out(d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t k = 0; k < d; k++) {
            Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const CMatrix &a, std::span<const Complex> v) {
    if (a.dim_ != v.size()) {
        throw ValidationError("CMatrix: dimension mismatch in matrix-vector product");
    }
    std::vector<Complex> out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; r++) {
        for (std::size_t c = 0; c < a.dim_; c++) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("max_abs_diff: dimension mismatch");
    }
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

CMatrix matrix_power(const CMatrix &m, unsigned exponent) {
    CMatrix result = CMatrix::identity(m.dim());
    CMatrix base = m;
    while (exponent > 0) {
        if (exponent & 1u) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

Complex trace_of_product(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("trace_of_product: dimension mismatch");
    }
    Complex t = 0;
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t k = 0; k < a.dim(); k++) {
            t += a(r, k) * b(k, r);
        }
    }
    return t;
}

namespace {

double off_diagonal_norm(const CMatrix &a) {
    double s = 0;
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t c = 0; c < a.dim(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

double frobenius_norm(const CMatrix &a) {
    double s = 0;
    for (const auto &z : a.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const CMatrix &m) {
    if (m.dim() == 0) {
        throw ValidationError("hermitian_eigen: empty matrix");
    }
    double defect = m.hermiticity_defect();
    if (!(defect <= 1e-10)) {
        std::ostringstream ss;
        ss << "hermitian_eigen: matrix is not Hermitian (max |a_ij - conj(a_ji)| = " << defect << ")";
        throw ValidationError(ss.str());
    }

    std::size_t d = m.dim();
    CMatrix a = m;
    // Symmetrize so rounding in the input cannot leak imaginary parts onto the diagonal.
    for (std::size_t r = 0; r < d; r++) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < d; c++) {
            Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(d);

    double scale = std::max(frobenius_norm(a), 1e-300);
    for (int sweep = 0; sweep < 100; sweep++) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < d; p++) {
            for (std::size_t q = p + 1; q < d; q++) {
                double mag = std::abs(a(p, q));
                if (mag <= 1e-300) {
                    continue;
                }
                // J = diag(1, e^{-i phase}) * R(theta) on the (p, q) plane makes
                // J^dag A J real-symmetric in that plane, then zeroes a_pq.
                Complex phase = a(p, q) / mag;
                double tau = (a(q, q).real() - a(p, p).real()) / (2 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double cs = 1 / std::sqrt(1 + t * t);
                double sn = t * cs;
                Complex jpp = cs;
                Complex jpq = sn;
                Complex jqp = -sn * std::conj(phase);
                Complex jqq = cs * std::conj(phase);

                for (std::size_t k = 0; k < d; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < d; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                for (std::size_t k = 0; k < d; k++) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    HermitianEigen out{std::vector<double>(d), CMatrix(d)};
    for (std::size_t k = 0; k < d; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < d; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> eig_hermitian(const CMatrix &m) {
    return hermitian_eigen(m).values;
}

}  // namespace dimwit
