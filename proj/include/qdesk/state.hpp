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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qdesk/linalg.hpp"

namespace qdesk {

// Q-bits are labeled 1..N, and Q-bit 1 is the MOST significant bit of the
// basis index: |110> lives at index 6. All registers hold 2^N amplitudes
// densely; the intended scale is N <= 12.

constexpr double kStateTol = 1e-10;

/// Bit position (LSB = 0) of 1-based Q-bit `qbit` in an N-Q-bit register.
inline int bit_position(int qbit, int n_qbits) { return n_qbits - qbit; }

/// "110" for index 6 in a 3-Q-bit register.
std::string bitstring_of(std::uint64_t index, int n_qbits);

/// Normalized pure state of an N-Q-bit register. Instances always satisfy
/// sum |a_i|^2 = 1 within 1e-10; operations return fresh values and never
/// mutate their inputs.
class StateVector {
public:
    /// The basis state |index> (e.g. basis(3, 6) = |110>).
    static StateVector basis(int n_qbits, std::uint64_t index);

    /// Basis state from its ket label, e.g. "110".
    static StateVector from_bits(std::string_view bits);

    /// Validates the amplitude count and that the norm is 1 within 1e-10.
    static StateVector from_amplitudes(int n_qbits, std::vector<cplx> amplitudes);

    /// Rescales the given amplitudes to unit norm (zero vector is an error).
    static StateVector normalized(int n_qbits, std::vector<cplx> amplitudes);

    int n_qbits() const { return n_qbits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::size_t i) const { return amps_[i]; }

    double norm() const;
    double probability(std::size_t i) const;

    /// P(Q-bit `qbit` measures 1).
    double marginal_one(int qbit) const;

    // Raw construction for operations whose output is normalized by
    // construction (unitary application, collapse). Not validated.
    struct Unchecked {};
    StateVector(Unchecked, int n_qbits, std::vector<cplx> amplitudes);

private:
    int n_qbits_;
    std::vector<cplx> amps_;
};

/// Hermitian, trace-1 matrix on an N-Q-bit register. Hermiticity and trace
/// are validated at construction; positive semidefiniteness is exposed via
/// min_eigenvalue() rather than recomputed on every build.
class DensityMatrix {
public:
    DensityMatrix(int n_qbits, ComplexMatrix entries);

    static DensityMatrix maximally_mixed(int n_qbits);

    int n_qbits() const { return n_qbits_; }
    std::size_t dim() const { return entries_.dim(); }
    const ComplexMatrix& matrix() const { return entries_; }
    cplx entry(std::size_t i, std::size_t j) const { return entries_.at(i, j); }

    double trace_real() const;
    /// Tr(rho^2); 1 exactly for pure states.
    double purity() const;
    double min_eigenvalue() const;
    std::vector<double> eigenvalues() const;

private:
    int n_qbits_;
    ComplexMatrix entries_;
};

struct MeasurementOutcome {
    std::uint64_t basis_index;
    double probability;
    StateVector post_state;  // collapsed basis state
};

/// Kronecker product: amplitude of |xy> is a[x] * b[y]; `a` supplies the
/// high-order Q-bits of the result.
StateVector tensor(const StateVector& a, const StateVector& b);

/// sum conj(a_i) * b_i. Throws on register size mismatch.
cplx inner_product(const StateVector& a, const StateVector& b);

/// Outer product |s><s|.
DensityMatrix to_density(const StateVector& s);

/// Reduced density matrix on `keep` (1-based Q-bit labels, kept in ascending
/// order). Trace is preserved. Throws if `keep` is empty or out of range.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<int>& keep);

/// Reduced density matrix of a pure state, computed directly from the
/// amplitudes without forming the full outer product.
DensityMatrix reduced_density(const StateVector& s, const std::set<int>& keep);

/// True iff s factorizes as (Q-bits 1..cut) x (Q-bits cut+1..N), decided by
/// the purity of the reduced state: Tr(rho_left^2) >= 1 - 1e-9.
bool is_product_state(const StateVector& s, int cut);

/// One outcome per basis state with nonzero probability, ascending index.
std::vector<MeasurementOutcome> measure_all(const StateVector& s);

/// {"n": N, "amplitudes": [[re, im], ...]} with 17 significant digits, so
/// the decimal text round-trips to the identical doubles.
std::string to_json_text(const StateVector& s);
StateVector state_from_json_text(const std::string& text);

}  // namespace qdesk
