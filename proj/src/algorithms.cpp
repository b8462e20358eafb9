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

#include "qdesk/algorithms.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>

namespace qdesk {

OracleId oracle_id_from_name(const std::string& name) {
    if (name == "f1") return OracleId::f1;
    if (name == "f2") return OracleId::f2;
    if (name == "f3") return OracleId::f3;
    if (name == "f4") return OracleId::f4;
    throw std::invalid_argument("unknown oracle function: " + name);
}

std::string oracle_name(OracleId id) {
    switch (id) {
        case OracleId::f1: return "f1";
        case OracleId::f2: return "f2";
        case OracleId::f3: return "f3";
        case OracleId::f4: return "f4";
    }
    throw std::logic_error("unreachable");
}

std::string verdict_name(Verdict v) {
    return v == Verdict::constant ? "constant" : "balanced";
}

int OracleFunction::value(OracleId id, int x) {
    if (x != 0 && x != 1) {
        throw std::invalid_argument("oracle input must be 0 or 1");
    }
    switch (id) {
        case OracleId::f1: return 0;
        case OracleId::f2: return 1;
        case OracleId::f3: return x;
        case OracleId::f4: return 1 - x;
    }
    throw std::logic_error("unreachable");
}

int OracleFunction::eval(int x) {
    ++calls_;
    return value(id_, x);
}

StateVector oracle_gate(OracleFunction& f, const StateVector& s) {
    if (s.n_qbits() != 2) {
        throw std::invalid_argument("oracle gate acts on a 2-Q-bit register");
    }
    ++f.calls_;

    // Basis permutation |x y> -> |x, y xor f(x)>; x is Q-bit 1 (high bit).
    std::vector<cplx> a(4, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < 4; ++i) {
        const int x = static_cast<int>(i >> 1);
        const int y = static_cast<int>(i & 1);
        const std::size_t j =
            (static_cast<std::size_t>(x) << 1) |
            static_cast<std::size_t>(y ^ OracleFunction::value(f.id_, x));
        a[j] += s.amplitude(i);
    }
    return StateVector(StateVector::Unchecked{}, 2, std::move(a));
}

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

GateOp dj_rotation_1() { return GateOp::rotation(1, {kQuarterPi, 0.0}); }
GateOp dj_rotation_2() { return GateOp::rotation(2, {kQuarterPi, std::numbers::pi}); }

}  // namespace

DJResult deutsch_jozsa(OracleFunction f) {
    StateVector s = StateVector::basis(2, 0);
    s = apply_gate(dj_rotation_1(), s);
    s = apply_gate(dj_rotation_2(), s);
    s = oracle_gate(f, s);
    s = apply_gate(dj_rotation_1().inverse(), s);
    s = apply_gate(dj_rotation_2().inverse(), s);

    // Deterministic readout: the distribution of Q-bit 1, not a sample.
    const Verdict v = s.marginal_one(1) > 0.5 ? Verdict::balanced : Verdict::constant;
    return DJResult{v, std::move(s), f.call_count()};
}

DJResult classical_distinguish(OracleFunction f) {
    const int f0 = f.eval(0);
    const int f1 = f.eval(1);
    const Verdict v = f0 == f1 ? Verdict::constant : Verdict::balanced;
    // Encode the verdict the same way the quantum run does: |00> or |10>.
    StateVector final_state = StateVector::basis(2, v == Verdict::constant ? 0 : 2);
    return DJResult{v, std::move(final_state), f.call_count()};
}

std::vector<GateOp> ghz_sequence(int n_qbits) {
    if (n_qbits < 2) {
        throw std::invalid_argument("entangling cascade needs at least 2 Q-bits");
    }
    std::vector<GateOp> seq;
    seq.push_back(GateOp::rotation(n_qbits, {kQuarterPi, std::numbers::pi}));
    for (int k = n_qbits - 1; k >= 1; --k) {
        seq.push_back(GateOp::xor_gate(k, k + 1));
    }
    return seq;
}

StateVector ghz_prepare(int n_qbits) {
    const std::vector<GateOp> seq = ghz_sequence(n_qbits);
    const std::uint64_t all_ones = (std::uint64_t{1} << n_qbits) - 1;
    return compose(seq, StateVector::basis(n_qbits, all_ones));
}

}  // namespace qdesk
