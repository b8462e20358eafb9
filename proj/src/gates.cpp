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

#include "qdesk/gates.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace qdesk {

namespace {

void check_label(int qbit, int n_qbits) {
    if (qbit < 1 || qbit > n_qbits) {
        throw std::out_of_range("gate Q-bit label out of range for register");
    }
}

}  // namespace

GateOp GateOp::rotation(int target, RotationParams params) {
    if (target < 1) {
        throw std::invalid_argument("rotation target must be a positive Q-bit label");
    }
    if (!std::isfinite(params.theta) || !std::isfinite(params.phi)) {
        throw std::invalid_argument("rotation angles must be finite");
    }
    return GateOp(Kind::rotation, target, 0, params);
}

GateOp GateOp::xor_gate(int target, int control) {
    if (target < 1 || control < 1) {
        throw std::invalid_argument("xor labels must be positive Q-bit labels");
    }
    if (target == control) {
        throw std::invalid_argument("xor target and control must differ");
    }
    return GateOp(Kind::xor_op, target, control, RotationParams{0.0, 0.0});
}

GateOp GateOp::inverse() const {
    if (kind_ == Kind::rotation) {
        return rotation(target_, RotationParams{-params_.theta, params_.phi});
    }
    return *this;
}

ComplexMatrix rotation_matrix(RotationParams p) {
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const cplx phase_pos = std::polar(1.0, p.phi);
    const cplx phase_neg = std::polar(1.0, -p.phi);

    ComplexMatrix m(2);
    m.at(0, 0) = cplx{c, 0.0};
    m.at(0, 1) = -phase_pos * s;
    m.at(1, 0) = phase_neg * s;
    m.at(1, 1) = cplx{c, 0.0};
    return m;
}

StateVector apply_gate(const GateOp& g, const StateVector& s) {
    const int n = s.n_qbits();
    std::vector<cplx> a = s.amplitudes();

    if (g.kind() == GateOp::Kind::rotation) {
        check_label(g.target(), n);
        const ComplexMatrix u = rotation_matrix(g.params());
        const std::uint64_t mask = std::uint64_t{1} << bit_position(g.target(), n);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i & mask) continue;
            const std::size_t j = i | mask;
            const cplx a0 = a[i];
            const cplx a1 = a[j];
            a[i] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
            a[j] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
        }
    } else {
        check_label(g.target(), n);
        check_label(g.control(), n);
        const std::uint64_t tmask = std::uint64_t{1} << bit_position(g.target(), n);
        const std::uint64_t cmask = std::uint64_t{1} << bit_position(g.control(), n);
        // Flip the target iff the control bit is 0.
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((i & cmask) == 0 && (i & tmask) == 0) {
                std::swap(a[i], a[i | tmask]);
            }
        }
    }

    return StateVector(StateVector::Unchecked{}, n, std::move(a));
}

ComplexMatrix realize_matrix(const GateOp& g, int n_qbits) {
    const std::size_t dim = std::size_t{1} << n_qbits;
    ComplexMatrix m(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const StateVector out = apply_gate(g, StateVector::basis(n_qbits, col));
        for (std::size_t row = 0; row < dim; ++row) {
            m.at(row, col) = out.amplitude(row);
        }
    }
    return m;
}

bool check_unitary(const GateOp& g, int n_qbits) {
    if (n_qbits <= 8) {
        return is_unitary(realize_matrix(g, n_qbits), 1e-10);
    }

    // Large registers: spot-check inner-product preservation instead of
    // forming the 2^N x 2^N Gram matrix.
    std::mt19937_64 rng(0x9d2c5680u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t dim = std::size_t{1} << n_qbits;
    auto random_state = [&] {
        std::vector<cplx> amps(dim);
        for (auto& v : amps) v = cplx{gauss(rng), gauss(rng)};
        return StateVector::normalized(n_qbits, std::move(amps));
    };
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi = random_state();
        const StateVector phi = random_state();
        const cplx before = inner_product(psi, phi);
        const cplx after = inner_product(apply_gate(g, psi), apply_gate(g, phi));
        if (std::abs(before - after) > 1e-9) return false;
    }
    return true;
}

StateVector compose(std::span<const GateOp> gates, const StateVector& s) {
    StateVector out = s;
    for (const GateOp& g : gates) {
        out = apply_gate(g, out);
    }
    return out;
}

}  // namespace qdesk
