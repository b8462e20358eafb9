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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdesk/algorithms.hpp"
#include "qdesk/state.hpp"

namespace qdesk {

// Plain-text circuit format, one statement per line, `#` to end of line is
// a comment:
//
//   init <bitstring>            exactly one, must come first; fixes N
//   rot <target> <theta> <phi>  angles are decimal radians
//   xor <target> <control>      flips target iff control is |0>
//   oracle <f1|f2|f3|f4>        2-Q-bit registers only
//   measure                     optional, at most one, last statement
//
// Q-bit labels are 1-based; label 1 is the leftmost symbol of the init
// bitstring.

struct CircuitStatement {
    enum class Kind { init, rot, xor_op, oracle, measure };
    Kind kind;
    std::string bits;              // init
    int target = 0;                // rot, xor
    int control = 0;               // xor
    double theta = 0.0;            // rot
    double phi = 0.0;              // rot
    OracleId oracle_id = OracleId::f1;

    bool operator==(const CircuitStatement&) const = default;
};

struct CircuitProgram {
    int n_qbits = 0;
    std::vector<CircuitStatement> statements;  // init first, by construction

    bool operator==(const CircuitProgram&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Throws ParseError (with the offending 1-based line) on any malformed,
/// unknown, out-of-range, or misplaced statement.
CircuitProgram parse_circuit(const std::string& text);

/// Canonical text form; parse_circuit(print_circuit(p)) == p, with angles
/// printed at 17 significant digits.
std::string print_circuit(const CircuitProgram& p);

struct RunReport {
    StateVector final_state;
    std::vector<MeasurementOutcome> outcomes;
    int oracle_calls = 0;
};

/// Executes the program. The report always carries the final distribution;
/// nothing is sampled.
RunReport run_program(const CircuitProgram& p);

/// {"final_state": ..., "outcomes": [{"bitstring", "probability"}, ...],
///  "oracle_calls": ...}; byte-stable across runs. If `sample_seed` is set,
/// one outcome drawn with that seed is appended under "sample".
std::string report_to_json(const RunReport& r,
                           std::optional<std::uint64_t> sample_seed = std::nullopt);

}  // namespace qdesk
