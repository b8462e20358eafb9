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

#include <span>
#include <vector>

#include "qdesk/linalg.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

/// Rotation angles in radians. theta = 0 is the identity; theta = pi/4 maps
/// a basis state to an equal-weight superposition.
struct RotationParams {
    double theta;
    double phi;
};

/// One of the two universal gates, bound to 1-based Q-bit labels. The
/// realized register operation is the tensor embedding with identity on all
/// untouched Q-bits.
///
/// NOTE: xor_gate is ZERO-controlled — the target flips iff the control
/// Q-bit is |0>. This is the opposite of the textbook CNOT and is the
/// convention every sequence in this codebase is written against.
class GateOp {
public:
    enum class Kind { rotation, xor_op };

    static GateOp rotation(int target, RotationParams params);
    static GateOp xor_gate(int target, int control);

    Kind kind() const { return kind_; }
    int target() const { return target_; }
    int control() const { return control_; }
    RotationParams params() const { return params_; }

    /// Rotation inverts as (theta -> -theta, same phi); XOR is an involution.
    GateOp inverse() const;

private:
    GateOp(Kind kind, int target, int control, RotationParams params)
        : kind_(kind), target_(target), control_(control), params_(params) {}

    Kind kind_;
    int target_;
    int control_;
    RotationParams params_;
};

/// 2x2 unitary with column |0> = (cos t, e^{-i phi} sin t) and column
/// |1> = (-e^{i phi} sin t, cos t).
ComplexMatrix rotation_matrix(RotationParams p);

/// U|s> via in-place amplitude-pair updates; the full 2^N x 2^N matrix is
/// never formed. Throws std::out_of_range if a gate label exceeds the
/// register.
StateVector apply_gate(const GateOp& g, const StateVector& s);

/// The full 2^N x 2^N embedding of `g`, built column by column. Intended
/// for verification at small N.
ComplexMatrix realize_matrix(const GateOp& g, int n_qbits);

/// U†U = identity within 1e-10. Checked on the realized matrix for N <= 8;
/// for larger registers, on preservation of 20 random inner products
/// within 1e-9.
bool check_unitary(const GateOp& g, int n_qbits);

/// Applies the gates left to right.
StateVector compose(std::span<const GateOp> gates, const StateVector& s);

}  // namespace qdesk
