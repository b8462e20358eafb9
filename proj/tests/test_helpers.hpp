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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qdesk/state.hpp"

namespace qdesk_test {

using qdesk::cplx;
using qdesk::StateVector;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline void check_state_near(const StateVector& s, const std::vector<cplx>& expected,
                             double tol) {
    REQUIRE(s.dim() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(std::abs(s.amplitude(i) - expected[i]) <= tol);
    }
}

/// |<a|b>| — 1 for equality up to a global phase.
inline double overlap_mag(const StateVector& a, const StateVector& b) {
    return std::abs(qdesk::inner_product(a, b));
}

inline StateVector random_state(std::mt19937_64& rng, int n_qbits) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n_qbits);
    for (auto& a : amps) a = cplx{gauss(rng), gauss(rng)};
    return StateVector::normalized(n_qbits, std::move(amps));
}

inline StateVector random_product_state(std::mt19937_64& rng, int n_qbits) {
    StateVector s = random_state(rng, 1);
    for (int q = 2; q <= n_qbits; ++q) {
        s = qdesk::tensor(s, random_state(rng, 1));
    }
    return s;
}

}  // namespace qdesk_test
