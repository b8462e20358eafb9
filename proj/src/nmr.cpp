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

#include "qdesk/nmr.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdesk {

namespace {

constexpr double kCertTol = 1e-12;
constexpr double kPptTol = 1e-10;

int qbits_from_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("configuration count must be a power of two, >= 2");
    }
    return std::countr_zero(dim);
}

}  // namespace

BoltzmannModel::BoltzmannModel(std::vector<double> energies_in, double kT_in)
    : energies(std::move(energies_in)), kT(kT_in) {
    qbits_from_dim(energies.size());
    if (!(kT > 0.0)) {
        throw std::invalid_argument("kT must be positive");
    }
}

int BoltzmannModel::n_qbits() const {
    return qbits_from_dim(energies.size());
}

std::vector<double> boltzmann_populations(const BoltzmannModel& m) {
    // Shift by the minimum energy so the exponentials stay in range.
    const double e_min = *std::min_element(m.energies.begin(), m.energies.end());
    std::vector<double> p(m.energies.size());
    double z = 0.0;
    for (std::size_t c = 0; c < p.size(); ++c) {
        p[c] = std::exp(-(m.energies[c] - e_min) / m.kT);
        z += p[c];
    }
    for (auto& v : p) v /= z;
    return p;
}

DensityMatrix thermal_density(const BoltzmannModel& m) {
    const std::vector<double> p = boltzmann_populations(m);
    ComplexMatrix d(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
        d.at(c, c) = cplx{p[c], 0.0};
    }
    return DensityMatrix(m.n_qbits(), std::move(d));
}

ComplexMatrix traceless_deviation(const DensityMatrix& rho) {
    ComplexMatrix out = rho.matrix();
    const double inv_d = 1.0 / static_cast<double>(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        out.at(i, i) -= cplx{inv_d, 0.0};
    }
    return out;
}

PseudoPureState::PseudoPureState(int n_qbits, double epsilon, StateVector pure_state)
    : n_qbits_(n_qbits), epsilon_(epsilon), pure_state_(std::move(pure_state)) {
    if (pure_state_.n_qbits() != n_qbits) {
        throw std::invalid_argument("pure part register size does not match n_qbits");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    }
}

DensityMatrix PseudoPureState::pure_part() const {
    return to_density(pure_state_);
}

DensityMatrix PseudoPureState::realized() const {
    const std::size_t dim = pure_state_.dim();
    const double mixed_weight = (1.0 - epsilon_) / static_cast<double>(dim);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m.at(i, j) = epsilon_ * pure_state_.amplitude(i) * std::conj(pure_state_.amplitude(j));
        }
        m.at(i, i) += cplx{mixed_weight, 0.0};
    }
    return DensityMatrix(n_qbits_, std::move(m));
}

PseudoPureState make_pseudo_pure(int n_qbits, double epsilon, const StateVector& pure_state) {
    return PseudoPureState(n_qbits, epsilon, pure_state);
}

namespace {

// Every Pauli string acts as a signed permutation of the basis:
// sigma_alpha |j> = phase(j) |j xor flip_mask>. X and Y flip the bit;
// Y and Z contribute bit-dependent phases (Y|b> = i(-1)^b |1-b>,
// Z|b> = (-1)^b |b>).
struct PauliAction {
    std::uint64_t flip_mask = 0;
    std::string label;
    std::vector<char> axes;  // per Q-bit, one of I X Y Z

    cplx phase(std::uint64_t j, int n_qbits) const {
        cplx p{1.0, 0.0};
        for (int q = 1; q <= n_qbits; ++q) {
            const int b = static_cast<int>(j >> bit_position(q, n_qbits) & 1u);
            switch (axes[static_cast<std::size_t>(q - 1)]) {
                case 'Y': p *= cplx{0.0, b ? -1.0 : 1.0}; break;
                case 'Z': if (b) p = -p; break;
                default: break;  // I, X: no phase
            }
        }
        return p;
    }
};

PauliAction pauli_action_from_code(std::uint64_t code, int n_qbits) {
    static constexpr char kAxis[4] = {'I', 'X', 'Y', 'Z'};
    PauliAction act;
    act.axes.resize(static_cast<std::size_t>(n_qbits));
    act.label.resize(static_cast<std::size_t>(n_qbits));
    // Base-4 digits, most significant digit = Q-bit 1.
    for (int q = n_qbits; q >= 1; --q) {
        const int digit = static_cast<int>(code & 3u);
        code >>= 2;
        const char axis = kAxis[digit];
        act.axes[static_cast<std::size_t>(q - 1)] = axis;
        act.label[static_cast<std::size_t>(q - 1)] = axis;
        if (axis == 'X' || axis == 'Y') {
            act.flip_mask |= std::uint64_t{1} << bit_position(q, n_qbits);
        }
    }
    return act;
}

}  // namespace

PauliDecomposition pauli_decompose(const DensityMatrix& rho) {
    const int n = rho.n_qbits();
    if (n > 5) {
        throw std::invalid_argument("Pauli decomposition limited to 5 Q-bits");
    }
    const std::size_t dim = rho.dim();
    const double scale = 1.0 / static_cast<double>(dim);

    PauliDecomposition out;
    out.n_qbits = n;
    const std::uint64_t n_strings = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < n_strings; ++code) {
        const PauliAction act = pauli_action_from_code(code, n);
        cplx tr{0.0, 0.0};
        for (std::uint64_t j = 0; j < dim; ++j) {
            tr += rho.entry(j, j ^ act.flip_mask) * act.phase(j, n);
        }
        out.coefficients.emplace(act.label, tr.real() * scale);
    }
    return out;
}

ComplexMatrix pauli_reconstruct(const PauliDecomposition& d) {
    const int n = d.n_qbits;
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m(dim);
    const std::uint64_t n_strings = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < n_strings; ++code) {
        const PauliAction act = pauli_action_from_code(code, n);
        const auto it = d.coefficients.find(act.label);
        if (it == d.coefficients.end()) {
            throw std::invalid_argument("decomposition is missing the string " + act.label);
        }
        const double t = it->second;
        if (t == 0.0) continue;
        for (std::uint64_t j = 0; j < dim; ++j) {
            m.at(j ^ act.flip_mask, j) += t * act.phase(j, n);
        }
    }
    return m;
}

SeparabilityCertificate separability_certificate(const PseudoPureState& p) {
    const int n = p.n_qbits();
    if (n > 3) {
        throw std::invalid_argument("projector expansion limited to 3 Q-bits (6^N terms)");
    }
    const PauliDecomposition dec = pauli_decompose(p.realized());

    // Assignment: per Q-bit an axis w in {x,y,z} and a sign s. The
    // coefficient of the product projector is a sum over the 2^N ways of
    // drawing each factor from the substitutions: identity contributes 1/3
    // on every projector of the same Q-bit, sigma_w contributes s on axis w
    // only. Collecting per Pauli string alpha that is I or w_k at each site:
    //   coeff(w, s) = sum_alpha t_alpha * prod_{k: alpha_k != I} s_k
    //                           * (1/3)^{#(alpha_k = I)}.
    static constexpr char kAxes[3] = {'X', 'Y', 'Z'};
    double min_coeff = std::numeric_limits<double>::infinity();

    std::vector<int> axis(static_cast<std::size_t>(n), 0);
    std::vector<int> sign(static_cast<std::size_t>(n), 0);  // 0 -> +1, 1 -> -1
    const std::uint64_t n_assignments = [&] {
        std::uint64_t v = 1;
        for (int k = 0; k < n; ++k) v *= 6;
        return v;
    }();

    for (std::uint64_t a = 0; a < n_assignments; ++a) {
        std::uint64_t rem = a;
        for (int k = 0; k < n; ++k) {
            axis[static_cast<std::size_t>(k)] = static_cast<int>(rem % 3);
            rem /= 3;
            sign[static_cast<std::size_t>(k)] = static_cast<int>(rem % 2);
            rem /= 2;
        }

        double coeff = 0.0;
        std::string key(static_cast<std::size_t>(n), 'I');
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
            double weight = 1.0;
            for (int k = 0; k < n; ++k) {
                if (subset >> k & 1u) {
                    key[static_cast<std::size_t>(k)] =
                        kAxes[static_cast<std::size_t>(axis[static_cast<std::size_t>(k)])];
                    if (sign[static_cast<std::size_t>(k)]) weight = -weight;
                } else {
                    key[static_cast<std::size_t>(k)] = 'I';
                    weight /= 3.0;
                }
            }
            coeff += weight * dec.coefficients.at(key);
        }
        min_coeff = std::min(min_coeff, coeff);
    }

    return SeparabilityCertificate{min_coeff >= -kCertTol, min_coeff};
}

PptResult ppt_check(const DensityMatrix& rho, int cut) {
    const int n = rho.n_qbits();
    if (cut < 1 || cut >= n) {
        throw std::invalid_argument("bipartition cut must satisfy 1 <= cut < N");
    }
    const std::size_t db = std::size_t{1} << (n - cut);
    const std::size_t da = rho.dim() / db;

    // Transpose the trailing factor: (a b, a' b') <- (a b', a' b).
    ComplexMatrix pt(rho.dim());
    for (std::size_t a = 0; a < da; ++a) {
        for (std::size_t ap = 0; ap < da; ++ap) {
            for (std::size_t b = 0; b < db; ++b) {
                for (std::size_t bp = 0; bp < db; ++bp) {
                    pt.at(a * db + b, ap * db + bp) = rho.entry(a * db + bp, ap * db + b);
                }
            }
        }
    }

    const double min_eig = hermitian_eigenvalues(pt).front();
    return PptResult{min_eig >= -kPptTol, min_eig};
}

double certificate_threshold(int n_qbits, const StateVector& pure_state, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("bisection tolerance must be positive");
    }
    auto certified = [&](double eps) {
        return separability_certificate(PseudoPureState(n_qbits, eps, pure_state))
            .separable_certified;
    };
    if (certified(1.0)) return 1.0;

    double lo = 0.0;  // certified: the expansion of the identity is positive
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (certified(mid) ? lo : hi) = mid;
    }
    return lo;
}

double epsilon_thermal(int n_qbits, double delta) {
    if (n_qbits < 1) {
        throw std::invalid_argument("register must hold at least one Q-bit");
    }
    if (!(delta > 0.0)) {
        throw std::invalid_argument("deviation scale must be positive");
    }
    return std::min(delta, 1.0);
}

}  // namespace qdesk
