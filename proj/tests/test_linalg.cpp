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

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qdesk/linalg.hpp"

using namespace qdesk;

TEST_CASE("hermitian eigenvalues of known small matrices") {
    SUBCASE("real symmetric 2x2") {
        ComplexMatrix m(2);
        m.at(0, 0) = 2.0;
        m.at(0, 1) = 1.0;
        m.at(1, 0) = 1.0;
        m.at(1, 1) = 2.0;
        const auto eig = hermitian_eigenvalues(m);
        CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-12));
    }

    SUBCASE("complex Hermitian 2x2 with known spectrum") {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        ComplexMatrix m(2);
        m.at(0, 0) = 1.0;
        m.at(0, 1) = cplx{0.0, 1.0};
        m.at(1, 0) = cplx{0.0, -1.0};
        m.at(1, 1) = 1.0;
        const auto eig = hermitian_eigenvalues(m);
        CHECK(std::abs(eig[0] - 0.0) < 1e-12);
        CHECK(std::abs(eig[1] - 2.0) < 1e-12);
    }

    SUBCASE("diagonal input is returned sorted") {
        ComplexMatrix m(3);
        m.at(0, 0) = 5.0;
        m.at(1, 1) = -1.0;
        m.at(2, 2) = 2.0;
        const auto eig = hermitian_eigenvalues(m);
        CHECK(eig == std::vector<double>{-1.0, 2.0, 5.0});
    }
}

TEST_CASE("eigenvalue sums match trace moments on random Hermitian matrices") {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 7);
        ComplexMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m.at(i, i) = gauss(rng);
            for (std::size_t j = i + 1; j < d; ++j) {
                const cplx v{gauss(rng), gauss(rng)};
                m.at(i, j) = v;
                m.at(j, i) = std::conj(v);
            }
        }

        const auto eig = hermitian_eigenvalues(m);
        const double sum = std::accumulate(eig.begin(), eig.end(), 0.0);
        double sum_sq = 0.0;
        for (double v : eig) sum_sq += v * v;

        CHECK(sum == doctest::Approx(m.trace().real()).epsilon(1e-10));
        CHECK(sum_sq == doctest::Approx((m * m).trace().real()).epsilon(1e-10));
    }
}

TEST_CASE("gram matrices are positive semidefinite") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix b(5);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) {
                b.at(i, j) = cplx{gauss(rng), gauss(rng)};
            }
        }
        const auto eig = hermitian_eigenvalues(b.adjoint() * b);
        CHECK(eig.front() >= -1e-10);
    }
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m.at(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(ComplexMatrix::identity(4), 1e-12));

    ComplexMatrix swap(2);  // permutation
    swap.at(0, 1) = 1.0;
    swap.at(1, 0) = 1.0;
    CHECK(is_unitary(swap, 1e-12));

    ComplexMatrix stretched = ComplexMatrix::identity(2);
    stretched.at(0, 0) = 1.01;
    CHECK_FALSE(is_unitary(stretched, 1e-10));
}
