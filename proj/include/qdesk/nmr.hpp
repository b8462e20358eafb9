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

#include <map>
#include <string>
#include <vector>

#include "qdesk/linalg.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

/// Thermal-equilibrium populations over the 2^N spin configurations.
/// Energies are indexed by basis index (Q-bit 1 = high bit) in any unit
/// consistent with kT.
struct BoltzmannModel {
    BoltzmannModel(std::vector<double> energies, double kT);
    std::vector<double> energies;
    double kT;
    int n_qbits() const;
};

/// P_c = exp(-E_c / kT) / Z, normalized so the populations sum to 1.
std::vector<double> boltzmann_populations(const BoltzmannModel& m);

/// Diagonal density matrix of the Boltzmann populations.
DensityMatrix thermal_density(const BoltzmannModel& m);

/// rho - (1/d) * identity: the traceless part that carries all of the
/// nontrivial dynamics. Not itself a state (trace 0).
ComplexMatrix traceless_deviation(const DensityMatrix& rho);

/// rho_eps = ((1 - eps)/d) * identity + eps * |psi><psi| for d = 2^N.
/// Spectrum: (1 - eps)/d with multiplicity d - 1, and (1 - eps)/d + eps.
class PseudoPureState {
public:
    PseudoPureState(int n_qbits, double epsilon, StateVector pure_state);

    int n_qbits() const { return n_qbits_; }
    std::size_t d() const { return pure_state_.dim(); }
    double epsilon() const { return epsilon_; }
    const StateVector& pure_state() const { return pure_state_; }

    DensityMatrix pure_part() const;  // |psi><psi|
    DensityMatrix realized() const;   // the full rho_eps

private:
    int n_qbits_;
    double epsilon_;
    StateVector pure_state_;
};

PseudoPureState make_pseudo_pure(int n_qbits, double epsilon, const StateVector& pure_state);

/// Expansion rho = sum_alpha t_alpha sigma_alpha over the 4^N tensor
/// products of {I, X, Y, Z}, with t_alpha = Tr(rho sigma_alpha) / 2^N.
/// Keys are strings like "IXZ" (position 0 = Q-bit 1). Real for Hermitian
/// input; the all-I coefficient is 1/2^N.
struct PauliDecomposition {
    int n_qbits;
    std::map<std::string, double> coefficients;
};

/// Limited to N <= 5 (4^N terms).
PauliDecomposition pauli_decompose(const DensityMatrix& rho);

/// sum_alpha t_alpha sigma_alpha, for checking the expansion round-trips.
ComplexMatrix pauli_reconstruct(const PauliDecomposition& d);

struct SeparabilityCertificate {
    bool separable_certified;
    double min_coefficient;
};

/// Rewrites rho_eps over the 6^N tensor products of single-Q-bit
/// eigenprojectors P_w^{+-} = (1 +- sigma_w)/2, w in {x, y, z}, by
/// substituting sigma_w = P_w^+ - P_w^- and
/// 1 = (1/3) sum_w (P_w^+ + P_w^-) into the Pauli expansion. If every
/// collected coefficient is >= -1e-12 the state is a convex mixture of
/// product states, hence separable. Sufficient only: a negative
/// coefficient proves nothing. Limited to N <= 3.
SeparabilityCertificate separability_certificate(const PseudoPureState& p);

struct PptResult {
    bool ppt;
    double min_eigenvalue;
};

/// Transposes the second factor of the bipartition after Q-bit `cut` and
/// reports whether the result stays positive semidefinite (all eigenvalues
/// >= -1e-10). Necessary for separability at any size; for 2 Q-bits it is
/// also sufficient, which makes it the ground-truth check there.
PptResult ppt_check(const DensityMatrix& rho, int cut);

/// Largest epsilon (within `tol`, by bisection) at which
/// separability_certificate still certifies the pseudo-pure family built
/// on `pure_state`. The certified set is an interval [0, eps*] because
/// every expansion coefficient is affine in epsilon and positive at 0.
double certificate_threshold(int n_qbits, const StateVector& pure_state, double tol = 1e-6);

/// Polarization reachable from a thermal state whose level spacings are of
/// order delta = E/kT: modeled directly as eps = delta, clipped to [0, 1].
double epsilon_thermal(int n_qbits, double delta);

}  // namespace qdesk
