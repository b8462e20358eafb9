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

#include <cstdint>
#include <vector>

#include "qdesk/linalg.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

/// A system entangled with its environment after noisy evolution: branch
/// states |phi_i> (orthonormal) with amplitudes c_i, and a single scalar
/// `overlap` standing for every pairwise environment inner product
/// <e_i|e_j>, i != j. overlap = 1 is noiseless unitary evolution; overlap =
/// 0 is complete dephasing into a classical mixture.
class EnvironmentModel {
public:
    EnvironmentModel(std::vector<cplx> branch_amplitudes,
                     std::vector<StateVector> branch_states, double overlap);

    std::size_t branch_count() const { return amplitudes_.size(); }
    int n_qbits() const { return states_.front().n_qbits(); }
    std::size_t dim() const { return states_.front().dim(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    const std::vector<StateVector>& states() const { return states_; }
    double overlap() const { return overlap_; }

private:
    std::vector<cplx> amplitudes_;
    std::vector<StateVector> states_;
    double overlap_;
};

/// <A> = sum_i |c_i|^2 <phi_i|A|phi_i>
///       + overlap * sum_{i != j} conj(c_i) c_j <phi_i|A|phi_j>.
/// At overlap 0 the cross terms vanish (fully decohered); at overlap 1 this
/// is the noiseless double sum. Throws if A is not Hermitian.
double expectation(const EnvironmentModel& env, const ComplexMatrix& observable);

/// rho = sum_i |c_i|^2 |phi_i><phi_i|
///       + overlap * sum_{i != j} c_i conj(c_j) |phi_i><phi_j|,
/// a convex blend of the diagonal mixture and the pure projector, so it is
/// positive semidefinite for overlap in [0, 1].
DensityMatrix decohered_density(const EnvironmentModel& env);

/// exp(-t / tau_dec): 1 at t = 0, monotonically down to 0.
double overlap_at(double t, double tau_dec);

struct DecoherenceBudget {
    DecoherenceBudget(double tau_dec, double tau_op, std::uint64_t required_ops);
    double tau_dec;
    double tau_op;
    std::uint64_t required_ops;
};

/// floor(tau_dec / tau_op) — the number of steps that fit before coherence
/// is lost.
std::uint64_t max_operations(const DecoherenceBudget& b);

/// Operation count for factoring a b-bit number, log-linearly interpolated
/// through the two published anchor points (4 bits, 1e6 ops) and
/// (400 bits, 1e12 ops). An interpolation, not a gate-level count; results
/// saturate at the uint64 range. Throws for bits < 2.
std::uint64_t shor_ops_for_bits(int bits);

/// Register size to factor the number n under the half-input rule:
/// ceil(log2(n / 2)). Requires n >= 4.
int shor_qbits_for_number(std::uint64_t n);

struct ShorRequirements {
    std::uint64_t ops;
    int qbits;
};

/// Requirements for a b-bit input: interpolated operation count plus the
/// half-input register size for the largest b-bit number (bits - 1).
ShorRequirements shor_requirements(int bits);

/// required_ops <= max_operations(b).
bool feasible(const DecoherenceBudget& b);

}  // namespace qdesk
