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

#include <cmath>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "qdesk/circuit.hpp"
#include "test_helpers.hpp"

using namespace qdesk;
using namespace qdesk_test;

namespace {

const std::string kGhzProgram =
    "init 111\n"
    "rot 3 0.7853981633974483 3.141592653589793\n"
    "xor 2 3\n"
    "xor 1 2\n"
    "measure\n";

std::string dj_program(const std::string& oracle) {
    return "init 00\n"
           "rot 1 0.7853981633974483 0\n"
           "rot 2 0.7853981633974483 3.141592653589793\n"
           "oracle " +
           oracle +
           "\n"
           "rot 1 -0.7853981633974483 0\n"
           "rot 2 -0.7853981633974483 3.141592653589793\n"
           "measure\n";
}

}  // namespace

TEST_CASE("parsing the cascade program") {
    const CircuitProgram p = parse_circuit(kGhzProgram);
    CHECK(p.n_qbits == 3);
    REQUIRE(p.statements.size() == 5);
    CHECK(p.statements[0].kind == CircuitStatement::Kind::init);
    CHECK(p.statements[0].bits == "111");
    CHECK(p.statements[1].kind == CircuitStatement::Kind::rot);
    CHECK(p.statements[1].target == 3);
    CHECK(p.statements[1].theta == 0.7853981633974483);
    CHECK(p.statements[1].phi == 3.141592653589793);
    CHECK(p.statements[2].kind == CircuitStatement::Kind::xor_op);
    CHECK(p.statements[2].target == 2);
    CHECK(p.statements[2].control == 3);
    CHECK(p.statements[4].kind == CircuitStatement::Kind::measure);
}

TEST_CASE("parser tolerates whitespace and comments") {
    const CircuitProgram p = parse_circuit(
        "# header comment\n"
        "\n"
        "  init 01   # two Q-bits\n"
        "\txor 2 1\n"
        "measure  \n");
    CHECK(p.n_qbits == 2);
    CHECK(p.statements.size() == 3);
}

TEST_CASE("parse errors name the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_circuit(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };

    CHECK(line_of("rot 1 0 0\n") == 1);                      // missing init
    CHECK(line_of("init 00\nrot 3 0 0\n") == 2);             // label out of range
    CHECK(line_of("init 00\nfrobnicate\n") == 2);            // unknown keyword
    CHECK(line_of("init 00\ninit 11\n") == 2);               // duplicate init
    CHECK(line_of("init 02\n") == 1);                        // bad bitstring
    CHECK(line_of("init 00\nrot 1 abc 0\n") == 2);           // bad angle
    CHECK(line_of("init 00\nxor 1 1\n") == 2);               // equal labels
    CHECK(line_of("init 000\noracle f1\n") == 2);            // oracle needs 2 Q-bits
    CHECK(line_of("init 00\noracle f9\n") == 2);             // unknown oracle
    CHECK(line_of("init 00\nmeasure\nxor 1 2\n") == 3);      // statement after measure
    CHECK(line_of("") == 1);                                 // empty program
    CHECK(line_of("init 00\nxor 1\n") == 2);                 // arity
    CHECK(line_of("init 00\nrot 1 inf 0\n") == 2);           // non-finite angle
}

TEST_CASE("print/parse round trip is the identity") {
    const std::vector<std::string> programs{
        kGhzProgram,
        dj_program("f3"),
        "init 00\nmeasure\n",
        "init 1\nrot 1 -0.25 1e-3\n",
    };
    for (const std::string& text : programs) {
        const CircuitProgram once = parse_circuit(text);
        const CircuitProgram twice = parse_circuit(print_circuit(once));
        CHECK(once == twice);
    }

    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> angle(-7.0, 7.0);
    for (int trial = 0; trial < 30; ++trial) {
        CircuitProgram p;
        p.n_qbits = 3;
        CircuitStatement init;
        init.kind = CircuitStatement::Kind::init;
        init.bits = "101";
        p.statements.push_back(init);
        for (int i = 0; i < 10; ++i) {
            CircuitStatement st;
            st.kind = CircuitStatement::Kind::rot;
            st.target = 1 + i % 3;
            st.theta = angle(rng);
            st.phi = angle(rng);
            p.statements.push_back(st);
        }
        CHECK(parse_circuit(print_circuit(p)) == p);
    }
}

TEST_CASE("running the cascade program splits the weight over 000 and 111") {
    const RunReport report = run_program(parse_circuit(kGhzProgram));
    REQUIRE(report.outcomes.size() == 2);
    CHECK(report.outcomes[0].basis_index == 0);
    CHECK(report.outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.outcomes[1].basis_index == 7);
    CHECK(report.outcomes[1].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.oracle_calls == 0);
}

TEST_CASE("running the decision program reads the verdict off Q-bit 1") {
    for (const std::string oracle : {"f1", "f2", "f3", "f4"}) {
        CAPTURE(oracle);
        const RunReport report = run_program(parse_circuit(dj_program(oracle)));
        const bool balanced = oracle == "f3" || oracle == "f4";
        CHECK(report.final_state.marginal_one(1) ==
              doctest::Approx(balanced ? 1.0 : 0.0).epsilon(1e-12));
        CHECK(report.oracle_calls == 1);
    }
}

TEST_CASE("a gateless program reproduces its init string") {
    const RunReport report = run_program(parse_circuit("init 00\nmeasure\n"));
    REQUIRE(report.outcomes.size() == 1);
    CHECK(report.outcomes[0].basis_index == 0);
    CHECK(report.outcomes[0].probability == 1.0);
}

TEST_CASE("report JSON") {
    const RunReport report = run_program(parse_circuit(kGhzProgram));
    const std::string text = report_to_json(report);

    // Identical bytes on a second serialization.
    CHECK(report_to_json(report) == text);

    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("oracle_calls") == 0);
    REQUIRE(j.at("outcomes").size() == 2);
    CHECK(j.at("outcomes")[0].at("bitstring") == "000");
    CHECK(j.at("outcomes")[1].at("bitstring") == "111");
    double total = 0.0;
    for (const auto& o : j.at("outcomes")) total += o.at("probability").get<double>();
    CHECK(std::abs(total - 1.0) < 1e-10);

    const StateVector state = state_from_json_text(j.at("final_state").dump());
    CHECK(state.n_qbits() == 3);

    SUBCASE("optional sampling is deterministic under a fixed seed") {
        const std::string sampled = report_to_json(report, 1234);
        CHECK(report_to_json(report, 1234) == sampled);
        const nlohmann::json js = nlohmann::json::parse(sampled);
        const std::string drawn = js.at("sample").at("bitstring").get<std::string>();
        CHECK((drawn == "000" || drawn == "111"));
    }
}

TEST_CASE("reported probabilities sum to one for random rotation programs") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    std::uniform_int_distribution<int> label(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        CircuitProgram p;
        p.n_qbits = 3;
        CircuitStatement init;
        init.kind = CircuitStatement::Kind::init;
        init.bits = "010";
        p.statements.push_back(init);
        for (int i = 0; i < 12; ++i) {
            CircuitStatement st;
            if (i % 3 == 2) {
                st.kind = CircuitStatement::Kind::xor_op;
                st.target = label(rng);
                do {
                    st.control = label(rng);
                } while (st.control == st.target);
            } else {
                st.kind = CircuitStatement::Kind::rot;
                st.target = label(rng);
                st.theta = angle(rng);
                st.phi = angle(rng);
            }
            p.statements.push_back(st);
        }

        const RunReport report = run_program(p);
        double total = 0.0;
        for (const auto& o : report.outcomes) total += o.probability;
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}
