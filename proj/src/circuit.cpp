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

#include "qdesk/circuit.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "qdesk/gates.hpp"
#include "qdesk/json_text.hpp"

namespace qdesk {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int parse_qbit_label(const std::string& token, int n_qbits, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a Q-bit label, got '" + token + "'");
    }
    if (value < 1 || value > n_qbits) {
        throw ParseError(line, "Q-bit label " + token + " outside [1, " +
                                   std::to_string(n_qbits) + "]");
    }
    return value;
}

double parse_angle(const std::string& token, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size() || !std::isfinite(v)) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a finite angle in radians, got '" + token + "'");
    }
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t n, int line) {
    if (tokens.size() != n) {
        throw ParseError(line, "'" + tokens[0] + "' takes " + std::to_string(n - 1) +
                                   " argument(s), got " + std::to_string(tokens.size() - 1));
    }
}

}  // namespace

CircuitProgram parse_circuit(const std::string& text) {
    CircuitProgram program;
    bool saw_init = false;
    bool saw_measure = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0];

        if (!saw_init && keyword != "init") {
            throw ParseError(line_no, "first statement must be 'init'");
        }
        if (saw_measure) {
            throw ParseError(line_no, "'measure' must be the last statement");
        }

        CircuitStatement st;
        if (keyword == "init") {
            if (saw_init) throw ParseError(line_no, "duplicate 'init'");
            expect_arity(tokens, 2, line_no);
            for (char c : tokens[1]) {
                if (c != '0' && c != '1') {
                    throw ParseError(line_no, "init bitstring must contain only 0 and 1");
                }
            }
            if (tokens[1].empty() || tokens[1].size() > 12) {
                throw ParseError(line_no, "register size must be between 1 and 12 Q-bits");
            }
            st.kind = CircuitStatement::Kind::init;
            st.bits = tokens[1];
            program.n_qbits = static_cast<int>(tokens[1].size());
            saw_init = true;
        } else if (keyword == "rot") {
            expect_arity(tokens, 4, line_no);
            st.kind = CircuitStatement::Kind::rot;
            st.target = parse_qbit_label(tokens[1], program.n_qbits, line_no);
            st.theta = parse_angle(tokens[2], line_no);
            st.phi = parse_angle(tokens[3], line_no);
        } else if (keyword == "xor") {
            expect_arity(tokens, 3, line_no);
            st.kind = CircuitStatement::Kind::xor_op;
            st.target = parse_qbit_label(tokens[1], program.n_qbits, line_no);
            st.control = parse_qbit_label(tokens[2], program.n_qbits, line_no);
            if (st.target == st.control) {
                throw ParseError(line_no, "xor target and control must differ");
            }
        } else if (keyword == "oracle") {
            expect_arity(tokens, 2, line_no);
            if (program.n_qbits != 2) {
                throw ParseError(line_no, "'oracle' needs a 2-Q-bit register");
            }
            st.kind = CircuitStatement::Kind::oracle;
            try {
                st.oracle_id = oracle_id_from_name(tokens[1]);
            } catch (const std::invalid_argument&) {
                throw ParseError(line_no, "oracle must be one of f1, f2, f3, f4");
            }
        } else if (keyword == "measure") {
            expect_arity(tokens, 1, line_no);
            st.kind = CircuitStatement::Kind::measure;
            saw_measure = true;
        } else {
            throw ParseError(line_no, "unknown statement '" + keyword + "'");
        }
        program.statements.push_back(std::move(st));
    }

    if (!saw_init) {
        throw ParseError(line_no == 0 ? 1 : line_no, "program is missing 'init'");
    }
    return program;
}

std::string print_circuit(const CircuitProgram& p) {
    std::string out;
    for (const CircuitStatement& st : p.statements) {
        switch (st.kind) {
            case CircuitStatement::Kind::init:
                out += "init " + st.bits;
                break;
            case CircuitStatement::Kind::rot:
                out += "rot " + std::to_string(st.target) + ' ' + jsontext::number(st.theta) +
                       ' ' + jsontext::number(st.phi);
                break;
            case CircuitStatement::Kind::xor_op:
                out += "xor " + std::to_string(st.target) + ' ' + std::to_string(st.control);
                break;
            case CircuitStatement::Kind::oracle:
                out += "oracle " + oracle_name(st.oracle_id);
                break;
            case CircuitStatement::Kind::measure:
                out += "measure";
                break;
        }
        out += '\n';
    }
    return out;
}

RunReport run_program(const CircuitProgram& p) {
    StateVector state = StateVector::from_bits(p.statements.front().bits);
    int oracle_calls = 0;

    for (std::size_t i = 1; i < p.statements.size(); ++i) {
        const CircuitStatement& st = p.statements[i];
        switch (st.kind) {
            case CircuitStatement::Kind::rot:
                state = apply_gate(GateOp::rotation(st.target, {st.theta, st.phi}), state);
                break;
            case CircuitStatement::Kind::xor_op:
                state = apply_gate(GateOp::xor_gate(st.target, st.control), state);
                break;
            case CircuitStatement::Kind::oracle: {
                OracleFunction f(st.oracle_id);
                state = oracle_gate(f, state);
                oracle_calls += f.call_count();
                break;
            }
            case CircuitStatement::Kind::measure:
            case CircuitStatement::Kind::init:
                break;
        }
    }

    std::vector<MeasurementOutcome> outcomes = measure_all(state);
    return RunReport{std::move(state), std::move(outcomes), oracle_calls};
}

std::string report_to_json(const RunReport& r, std::optional<std::uint64_t> sample_seed) {
    std::string out = "{\"final_state\":";
    out += to_json_text(r.final_state);
    out += ",\"outcomes\":[";
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
        if (i) out += ',';
        out += "{\"bitstring\":";
        out += jsontext::quoted(bitstring_of(r.outcomes[i].basis_index, r.final_state.n_qbits()));
        out += ",\"probability\":";
        out += jsontext::number(r.outcomes[i].probability);
        out += '}';
    }
    out += "],\"oracle_calls\":";
    out += std::to_string(r.oracle_calls);

    if (sample_seed) {
        std::mt19937_64 rng(*sample_seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double u = unit(rng);
        double cumulative = 0.0;
        std::uint64_t drawn = r.outcomes.empty() ? 0 : r.outcomes.back().basis_index;
        for (const auto& o : r.outcomes) {
            cumulative += o.probability;
            if (u <= cumulative) {
                drawn = o.basis_index;
                break;
            }
        }
        out += ",\"sample\":{\"seed\":";
        out += std::to_string(*sample_seed);
        out += ",\"bitstring\":";
        out += jsontext::quoted(bitstring_of(drawn, r.final_state.n_qbits()));
        out += '}';
    }

    out += '}';
    return out;
}

}  // namespace qdesk
