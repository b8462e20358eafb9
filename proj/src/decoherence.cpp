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

#include "qdesk/decoherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdesk {

EnvironmentModel::EnvironmentModel(std::vector<cplx> branch_amplitudes,
                                   std::vector<StateVector> branch_states, double overlap)
    : amplitudes_(std::move(branch_amplitudes)),
      states_(std::move(branch_states)),
      overlap_(overlap) {
    if (amplitudes_.empty() || amplitudes_.size() != states_.size()) {
        throw std::invalid_argument("environment model needs matching amplitude/state lists");
    }
    if (!(overlap_ >= 0.0 && overlap_ <= 1.0)) {
        throw std::invalid_argument("overlap must lie in [0, 1]");
    }
    double total = 0.0;
    for (const auto& c : amplitudes_) total += std::norm(c);
    if (std::abs(total - 1.0) > kStateTol) {
        throw std::invalid_argument("branch amplitudes must satisfy sum |c_i|^2 = 1");
    }
    const int n = states_.front().n_qbits();
    for (const auto& s : states_) {
        if (s.n_qbits() != n) {
            throw std::invalid_argument("branch states must share one register size");
        }
    }
    if (states_.size() > states_.front().dim()) {
        throw std::invalid_argument("more orthonormal branches than the register dimension");
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        for (std::size_t j = i + 1; j < states_.size(); ++j) {
            if (std::abs(inner_product(states_[i], states_[j])) > kStateTol) {
                throw std::invalid_argument("branch states must be pairwise orthogonal");
            }
        }
    }
}

namespace {

cplx matrix_element(const StateVector& bra, const ComplexMatrix& a, const StateVector& ket) {
    cplx out{0.0, 0.0};
    for (std::size_t i = 0; i < bra.dim(); ++i) {
        cplx row{0.0, 0.0};
        for (std::size_t j = 0; j < ket.dim(); ++j) {
            row += a.at(i, j) * ket.amplitude(j);
        }
        out += std::conj(bra.amplitude(i)) * row;
    }
    return out;
}

}  // namespace

double expectation(const EnvironmentModel& env, const ComplexMatrix& observable) {
    if (observable.dim() != env.dim()) {
        throw std::invalid_argument("observable dimension does not match branch states");
    }
    if (!observable.is_hermitian(kStateTol)) {
        throw std::invalid_argument("observable must be Hermitian");
    }

    const auto& c = env.amplitudes();
    const auto& phi = env.states();
    cplx total{0.0, 0.0};
    for (std::size_t i = 0; i < env.branch_count(); ++i) {
        total += std::norm(c[i]) * matrix_element(phi[i], observable, phi[i]);
    }
    for (std::size_t i = 0; i < env.branch_count(); ++i) {
        for (std::size_t j = 0; j < env.branch_count(); ++j) {
            if (i == j) continue;
            total += env.overlap() * std::conj(c[i]) * c[j] *
                     matrix_element(phi[i], observable, phi[j]);
        }
    }
    // Hermitian observable: the cross terms pair up conjugately, so any
    // residual imaginary part is roundoff.
    return total.real();
}

DensityMatrix decohered_density(const EnvironmentModel& env) {
    const std::size_t d = env.dim();
    const auto& c = env.amplitudes();
    const auto& phi = env.states();

    ComplexMatrix m(d);
    for (std::size_t i = 0; i < env.branch_count(); ++i) {
        for (std::size_t j = 0; j < env.branch_count(); ++j) {
            const cplx weight =
                i == j ? cplx{std::norm(c[i]), 0.0} : env.overlap() * c[i] * std::conj(c[j]);
            if (weight == cplx{0.0, 0.0}) continue;
            for (std::size_t r = 0; r < d; ++r) {
                const cplx left = weight * phi[i].amplitude(r);
                if (left == cplx{0.0, 0.0}) continue;
                for (std::size_t s = 0; s < d; ++s) {
                    m.at(r, s) += left * std::conj(phi[j].amplitude(s));
                }
            }
        }
    }
    return DensityMatrix(env.n_qbits(), std::move(m));
}

double overlap_at(double t, double tau_dec) {
    if (!(tau_dec > 0.0)) {
        throw std::invalid_argument("tau_dec must be positive");
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("elapsed time must be nonnegative");
    }
    return std::exp(-t / tau_dec);
}

DecoherenceBudget::DecoherenceBudget(double tau_dec_in, double tau_op_in,
                                     std::uint64_t required_ops_in)
    : tau_dec(tau_dec_in), tau_op(tau_op_in), required_ops(required_ops_in) {
    if (!(tau_dec > 0.0) || !(tau_op > 0.0)) {
        throw std::invalid_argument("decoherence and operation times must be positive");
    }
}

std::uint64_t max_operations(const DecoherenceBudget& b) {
    const double ratio = std::floor(b.tau_dec / b.tau_op);
    if (ratio >= 1.8e19) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(ratio);
}

std::uint64_t shor_ops_for_bits(int bits) {
    if (bits < 2) {
        throw std::invalid_argument("factoring needs an input of at least 2 bits");
    }
    const double exponent = 6.0 + 6.0 * (static_cast<double>(bits) - 4.0) / 396.0;
    if (exponent >= 19.0) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(std::llround(std::pow(10.0, exponent)));
}

int shor_qbits_for_number(std::uint64_t n) {
    if (n < 4) {
        throw std::invalid_argument("half-input rule needs n >= 4");
    }
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(n) / 2.0)));
}

ShorRequirements shor_requirements(int bits) {
    return ShorRequirements{shor_ops_for_bits(bits), bits - 1};
}

bool feasible(const DecoherenceBudget& b) {
    return b.required_ops <= max_operations(b);
}

}  // namespace qdesk
