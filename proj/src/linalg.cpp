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

#include "qdesk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdesk {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}) {
    if (dim == 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = cplx{1.0, 0.0};
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m.at(j, i) = std::conj(at(i, j));
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch in product");
    }
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const cplx aik = at(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                out.at(i, j) += aik * rhs.at(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch in sum");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch in difference");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
        }
    }
    return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch in comparison");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
    }
    return m;
}

double ComplexMatrix::max_abs_entry() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

// Cyclic Jacobi on a real symmetric matrix stored row-major; returns the
// eigenvalues ascending. Quadratic convergence, a handful of sweeps for the
// matrix sizes seen here.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    const double stop = std::max(scale, 1.0) * 1e-14;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::abs(a[p * n + q]));
            }
        }
        if (off <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-8)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    const std::size_t d = m.dim();

    // Real symmetric embedding of twice the size; spectrum of A doubled.
    const std::size_t n = 2 * d;
    std::vector<double> b(n * n, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const cplx v = m.at(i, j);
            b[i * n + j] = v.real();
            b[i * n + (j + d)] = -v.imag();
            b[(i + d) * n + j] = v.imag();
            b[(i + d) * n + (j + d)] = v.real();
        }
    }

    const std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(b), n);
    std::vector<double> eig(d);
    for (std::size_t i = 0; i < d; ++i) eig[i] = doubled[2 * i];
    return eig;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    const ComplexMatrix gram = m.adjoint() * m;
    return gram.max_abs_diff(ComplexMatrix::identity(m.dim())) <= tol;
}

}  // namespace qdesk
