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

#ifndef DIMWIT_LINALG_H
#define DIMWIT_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dimwit {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for the tiny operators
/// used here (dimension 2 to 9), so every operation is a plain O(d^3) loop.
class CMatrix {
   public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim);
    /// Throws ValidationError unless entries.size() == dim * dim and all are finite.
    CMatrix(std::size_t dim, std::vector<Complex> entries);

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(std::span<const Complex> diag);
    /// Builds from nested rows; every row must have rows.size() entries.
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    /// |v><v| for an (unnormalized) column vector v.
    static CMatrix outer(std::span<const Complex> v);
    /// |e_k><e_k| in dimension dim.
    static CMatrix basis_projector(std::size_t dim, std::size_t k);

    std::size_t dim() const {
        return dim_;
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    CMatrix adjoint() const;
    Complex trace() const;
    bool all_finite() const;

    /// Largest entry-wise |a_ij - conj(a_ji)|.
    double hermiticity_defect() const;
    /// Largest entry-wise deviation of U^dag U from the identity.
    double unitarity_defect() const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(Complex scale);

    friend CMatrix operator+(CMatrix a, const CMatrix &b) {
        return a += b;
    }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) {
        return a -= b;
    }
    friend CMatrix operator*(CMatrix a, Complex s) {
        return a *= s;
    }
    friend CMatrix operator*(Complex s, CMatrix a) {
        return a *= s;
    }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend std::vector<Complex> operator*(const CMatrix &a, std::span<const Complex> v);
    friend bool operator==(const CMatrix &a, const CMatrix &b) = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Largest entry-wise |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// Integer power of a square matrix (exponent >= 0) by repeated squaring.
CMatrix matrix_power(const CMatrix &m, unsigned exponent);

/// Trace of a*b without forming the product.
Complex trace_of_product(const CMatrix &a, const CMatrix &b);

struct HermitianEigen {
    /// Nondecreasing.
    std::vector<double> values;
    /// Column k is the eigenvector for values[k].
    CMatrix vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws ValidationError if the input is not Hermitian within 1e-10.
HermitianEigen hermitian_eigen(const CMatrix &m);

/// Eigenvalues only, nondecreasing.
std::vector<double> eig_hermitian(const CMatrix &m);

}  // namespace dimwit

#endif
