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

// qdesk command line: batch circuit runs and the canned analyses. Every
// subcommand writes a single JSON document to stdout; diagnostics go to
// stderr and any failure exits nonzero.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qdesk/algorithms.hpp"
#include "qdesk/circuit.hpp"
#include "qdesk/decoherence.hpp"
#include "qdesk/json_text.hpp"
#include "qdesk/nmr.hpp"

namespace {

using namespace qdesk;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open circuit file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_run(const std::string& path, std::optional<std::uint64_t> sample_seed) {
    const CircuitProgram program = parse_circuit(read_file(path));
    const RunReport report = run_program(program);
    std::cout << report_to_json(report, sample_seed) << '\n';
    return 0;
}

int cmd_dj(const std::string& function) {
    const DJResult result = deutsch_jozsa(OracleFunction(oracle_id_from_name(function)));
    std::string out = "{\"function\":" + jsontext::quoted(function);
    out += ",\"verdict\":" + jsontext::quoted(verdict_name(result.verdict));
    out += ",\"oracle_calls\":" + std::to_string(result.oracle_calls);
    out += ",\"final_state\":" + to_json_text(result.final_state);
    out += '}';
    std::cout << out << '\n';
    return 0;
}

int cmd_ghz(int n) {
    const StateVector state = ghz_prepare(n);
    const std::vector<MeasurementOutcome> outcomes = measure_all(state);
    std::string out = "{\"n\":" + std::to_string(n);
    out += ",\"final_state\":" + to_json_text(state);
    out += ",\"outcomes\":[";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (i) out += ',';
        out += "{\"bitstring\":" + jsontext::quoted(bitstring_of(outcomes[i].basis_index, n));
        out += ",\"probability\":" + jsontext::number(outcomes[i].probability) + '}';
    }
    out += "]}";
    std::cout << out << '\n';
    return 0;
}

int cmd_budget(double tau_dec, double tau_op, int bits) {
    const ShorRequirements req = shor_requirements(bits);
    const DecoherenceBudget budget(tau_dec, tau_op, req.ops);
    std::string out = "{\"M\":" + jsontext::number(max_operations(budget));
    out += ",\"required_ops\":" + jsontext::number(req.ops);
    out += ",\"required_ops_model\":\"log-linear interpolation between (4 bits, 1e6) and (400 bits, 1e12)\"";
    out += ",\"qbits\":" + std::to_string(req.qbits);
    out += ",\"feasible\":" + jsontext::boolean(feasible(budget));
    out += '}';
    std::cout << out << '\n';
    return 0;
}

StateVector named_pure_state(const std::string& name, int n) {
    if (name == "basis0") return StateVector::basis(n, 0);
    if (name == "ghz") return ghz_prepare(n);
    if (name == "bell") {
        if (n != 2) throw std::runtime_error("--pure bell needs --n 2");
        return ghz_prepare(2);
    }
    throw std::runtime_error("unknown pure state '" + name + "' (bell, ghz, basis0)");
}

int cmd_nmr_sep(int n, double epsilon, const std::string& pure_name) {
    const StateVector pure = named_pure_state(pure_name, n);
    const PseudoPureState pps = make_pseudo_pure(n, epsilon, pure);
    const SeparabilityCertificate cert = separability_certificate(pps);
    const PptResult ppt = ppt_check(pps.realized(), 1);
    const double threshold = certificate_threshold(n, pure);

    std::string out = "{\"n\":" + std::to_string(n);
    out += ",\"epsilon\":" + jsontext::number(epsilon);
    out += ",\"pure\":" + jsontext::quoted(pure_name);
    out += ",\"certified\":" + jsontext::boolean(cert.separable_certified);
    out += ",\"min_coefficient\":" + jsontext::number(cert.min_coefficient);
    out += ",\"ppt\":" + jsontext::boolean(ppt.ppt);
    out += ",\"ppt_min_eigenvalue\":" + jsontext::number(ppt.min_eigenvalue);
    // PPT decides separability only for 2 Q-bits; beyond that it can only refute.
    out += ",\"ppt_scope\":";
    out += jsontext::quoted(n == 2 ? "necessary_and_sufficient" : "necessary_only");
    out += ",\"threshold_estimate\":" + jsontext::number(threshold);
    out += '}';
    std::cout << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale quantum register simulator"};
    app.require_subcommand(1);

    std::string circuit_path;
    std::optional<std::uint64_t> sample_seed;
    CLI::App* run = app.add_subcommand("run", "parse and execute a circuit file");
    run->add_option("file", circuit_path, "circuit file")->required();
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt =
        run->add_option("--sample", seed_value, "also draw one sample with this seed");

    std::string dj_function;
    CLI::App* dj = app.add_subcommand("dj", "run the constant-vs-balanced decision");
    dj->add_option("--function", dj_function, "one of f1, f2, f3, f4")->required();

    int ghz_n = 3;
    CLI::App* ghz = app.add_subcommand("ghz", "prepare (|1..1> + |0..0>)/sqrt(2)");
    ghz->add_option("--n", ghz_n, "register size (default 3)");

    double tau_dec = 0.0;
    double tau_op = 0.0;
    int bits = 0;
    CLI::App* budget = app.add_subcommand("budget", "operation budget for factoring");
    budget->add_option("--tau-dec", tau_dec, "decoherence time, seconds")->required();
    budget->add_option("--tau-op", tau_op, "time per operation, seconds")->required();
    budget->add_option("--bits", bits, "bit size of the number to factor")->required();

    int sep_n = 2;
    double sep_epsilon = 0.0;
    std::string sep_pure = "bell";
    CLI::App* nmr_sep = app.add_subcommand("nmr-sep", "pseudo-pure separability analysis");
    nmr_sep->add_option("--n", sep_n, "register size (<= 3)")->required();
    nmr_sep->add_option("--epsilon", sep_epsilon, "pseudo-pure polarization in [0, 1]")->required();
    nmr_sep->add_option("--pure", sep_pure, "pure part: bell, ghz, or basis0")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (seed_opt->count() > 0) sample_seed = seed_value;
            return cmd_run(circuit_path, sample_seed);
        }
        if (dj->parsed()) return cmd_dj(dj_function);
        if (ghz->parsed()) return cmd_ghz(ghz_n);
        if (budget->parsed()) return cmd_budget(tau_dec, tau_op, bits);
        if (nmr_sep->parsed()) return cmd_nmr_sep(sep_n, sep_epsilon, sep_pure);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
