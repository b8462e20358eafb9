// Copyright 2026 The qdesk Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qdesk {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for desk-scale registers
/// (dimensions up to a few thousand); no sparse storage.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const cplx& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scalar);

    cplx trace() const;
    bool is_hermitian(double tol) const;

    /// max_{ij} |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix& rhs) const;
    double max_abs_entry() const;

private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

/// Eigenvalues of a Hermitian matrix, ascending. Uses a cyclic Jacobi sweep
/// on the real symmetric embedding [[Re A, -Im A], [Im A, Re A]], whose
/// spectrum is that of A with every eigenvalue doubled.
/// Throws std::invalid_argument if the input is not Hermitian within 1e-8.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// U is unitary iff U†U = identity within `tol` entrywise.
bool is_unitary(const ComplexMatrix& m, double tol);

}  // namespace qdesk
