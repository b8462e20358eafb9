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

#include <string>
#include <vector>

#include "qdesk/gates.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

/// The four Boolean functions on one bit: f1 = 0, f2 = 1, f3 = x, f4 = !x.
/// f1 and f2 are constant, f3 and f4 balanced.
enum class OracleId { f1, f2, f3, f4 };

OracleId oracle_id_from_name(const std::string& name);
std::string oracle_name(OracleId id);

/// A counted black box for one of the four functions. The call counter is
/// the only mutable state in the library; each run owns its own instance.
class OracleFunction {
public:
    explicit OracleFunction(OracleId id) : id_(id) {}

    OracleId id() const { return id_; }
    int call_count() const { return calls_; }

    /// Classical query; one call per invocation.
    int eval(int x);

    /// Value table without touching the counter (test oracle convenience).
    static int value(OracleId id, int x);

private:
    friend StateVector oracle_gate(OracleFunction& f, const StateVector& s);
    OracleId id_;
    int calls_ = 0;
};

enum class Verdict { constant, balanced };

std::string verdict_name(Verdict v);

struct DJResult {
    Verdict verdict;
    StateVector final_state;
    int oracle_calls;
};

/// |x>|y> -> |x>|y xor f(x)>, extended linearly over a 2-Q-bit register.
/// Counts as ONE oracle call regardless of superposition. Throws for N != 2.
StateVector oracle_gate(OracleFunction& f, const StateVector& s);

/// Decides constant vs balanced with a single oracle call: prepare |00>,
/// rotate Q-bit 1 by (pi/4, 0) and Q-bit 2 by (pi/4, pi), query once, undo
/// the rotations, and read Q-bit 1 (0 = constant, 1 = balanced). The final
/// state is a basis state up to a global sign.
DJResult deutsch_jozsa(OracleFunction f);

/// Classical baseline: evaluates f(0) and f(1), so exactly two calls.
DJResult classical_distinguish(OracleFunction f);

/// The entangling cascade for |1..1> -> (|1..1> + |0..0>)/sqrt(2): one
/// rotation (pi/4, pi) on Q-bit N, then xor(k, k+1) for k = N-1 down to 1.
std::vector<GateOp> ghz_sequence(int n_qbits);

/// Runs ghz_sequence on |1..1>. Requires n_qbits >= 2.
StateVector ghz_prepare(int n_qbits = 3);

}  // namespace qdesk
