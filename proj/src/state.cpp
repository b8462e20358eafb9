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

#include "qdesk/state.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "qdesk/json_text.hpp"

namespace qdesk {

namespace {

void check_register_size(int n_qbits) {
    if (n_qbits < 1) {
        throw std::invalid_argument("register must hold at least one Q-bit");
    }
    if (n_qbits > 24) {
        throw std::invalid_argument("register size beyond desk scale");
    }
}

double norm_squared(const std::vector<cplx>& amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

}  // namespace

std::string bitstring_of(std::uint64_t index, int n_qbits) {
    std::string s(static_cast<std::size_t>(n_qbits), '0');
    for (int q = 1; q <= n_qbits; ++q) {
        if (index >> bit_position(q, n_qbits) & 1u) s[q - 1] = '1';
    }
    return s;
}

StateVector::StateVector(Unchecked, int n_qbits, std::vector<cplx> amplitudes)
    : n_qbits_(n_qbits), amps_(std::move(amplitudes)) {}

StateVector StateVector::basis(int n_qbits, std::uint64_t index) {
    check_register_size(n_qbits);
    const std::size_t dim = std::size_t{1} << n_qbits;
    if (index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    std::vector<cplx> amps(dim, cplx{0.0, 0.0});
    amps[index] = cplx{1.0, 0.0};
    return StateVector(Unchecked{}, n_qbits, std::move(amps));
}

StateVector StateVector::from_bits(std::string_view bits) {
    if (bits.empty()) {
        throw std::invalid_argument("empty bitstring");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::from_amplitudes(int n_qbits, std::vector<cplx> amplitudes) {
    check_register_size(n_qbits);
    if (amplitudes.size() != (std::size_t{1} << n_qbits)) {
        throw std::invalid_argument("amplitude count must be 2^N");
    }
    if (std::abs(norm_squared(amplitudes) - 1.0) > kStateTol) {
        throw std::invalid_argument("state is not normalized");
    }
    return StateVector(Unchecked{}, n_qbits, std::move(amplitudes));
}

StateVector StateVector::normalized(int n_qbits, std::vector<cplx> amplitudes) {
    check_register_size(n_qbits);
    if (amplitudes.size() != (std::size_t{1} << n_qbits)) {
        throw std::invalid_argument("amplitude count must be 2^N");
    }
    const double n2 = norm_squared(amplitudes);
    if (n2 <= 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amplitudes) a *= inv;
    return StateVector(Unchecked{}, n_qbits, std::move(amplitudes));
}

double StateVector::norm() const {
    return std::sqrt(norm_squared(amps_));
}

double StateVector::probability(std::size_t i) const {
    return std::norm(amps_[i]);
}

double StateVector::marginal_one(int qbit) const {
    if (qbit < 1 || qbit > n_qbits_) {
        throw std::out_of_range("Q-bit label out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << bit_position(qbit, n_qbits_);
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) p += std::norm(amps_[i]);
    }
    return p;
}

DensityMatrix::DensityMatrix(int n_qbits, ComplexMatrix entries)
    : n_qbits_(n_qbits), entries_(std::move(entries)) {
    check_register_size(n_qbits);
    if (entries_.dim() != (std::size_t{1} << n_qbits)) {
        throw std::invalid_argument("density matrix dimension must be 2^N");
    }
    if (!entries_.is_hermitian(kStateTol)) {
        throw std::invalid_argument("density matrix must be Hermitian");
    }
    if (std::abs(entries_.trace() - cplx{1.0, 0.0}) > kStateTol) {
        throw std::invalid_argument("density matrix must have unit trace");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qbits) {
    check_register_size(n_qbits);
    const std::size_t d = std::size_t{1} << n_qbits;
    ComplexMatrix m = ComplexMatrix::identity(d);
    m *= cplx{1.0 / static_cast<double>(d), 0.0};
    return DensityMatrix(n_qbits, std::move(m));
}

double DensityMatrix::trace_real() const {
    return entries_.trace().real();
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    for (std::size_t i = 0; i < entries_.dim(); ++i) {
        for (std::size_t j = 0; j < entries_.dim(); ++j) {
            s += std::norm(entries_.at(i, j));
        }
    }
    return s;
}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eigenvalues(entries_).front();
}

std::vector<double> DensityMatrix::eigenvalues() const {
    return hermitian_eigenvalues(entries_);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const std::size_t db = b.dim();
    std::vector<cplx> out(a.dim() * db);
    for (std::size_t x = 0; x < a.dim(); ++x) {
        for (std::size_t y = 0; y < db; ++y) {
            out[x * db + y] = a.amplitude(x) * b.amplitude(y);
        }
    }
    return StateVector(StateVector::Unchecked{}, a.n_qbits() + b.n_qbits(), std::move(out));
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qbits() != b.n_qbits()) {
        throw std::invalid_argument("inner product requires equal register sizes");
    }
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return s;
}

DensityMatrix to_density(const StateVector& s) {
    ComplexMatrix m(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = 0; j < s.dim(); ++j) {
            m.at(i, j) = s.amplitude(i) * std::conj(s.amplitude(j));
        }
    }
    return DensityMatrix(s.n_qbits(), std::move(m));
}

namespace {

struct Bipartition {
    int n_keep;
    int n_trace;
    std::vector<int> keep_pos;   // bit positions of kept Q-bits, result-MSB first
    std::vector<int> trace_pos;  // bit positions of traced Q-bits
};

Bipartition split_register(int n_qbits, const std::set<int>& keep) {
    if (keep.empty()) {
        throw std::invalid_argument("keep-set must be nonempty");
    }
    for (int q : keep) {
        if (q < 1 || q > n_qbits) {
            throw std::out_of_range("keep-set Q-bit label out of range");
        }
    }
    Bipartition bp;
    bp.n_keep = static_cast<int>(keep.size());
    bp.n_trace = n_qbits - bp.n_keep;
    for (int q : keep) bp.keep_pos.push_back(bit_position(q, n_qbits));
    for (int q = 1; q <= n_qbits; ++q) {
        if (!keep.contains(q)) bp.trace_pos.push_back(bit_position(q, n_qbits));
    }
    return bp;
}

// Scatter a reduced index and a traced index back into a full register index.
std::uint64_t assemble_index(const Bipartition& bp, std::uint64_t kept, std::uint64_t traced) {
    std::uint64_t full = 0;
    for (int k = 0; k < bp.n_keep; ++k) {
        // kept-index bit k counts from its own MSB, matching keep order.
        if (kept >> (bp.n_keep - 1 - k) & 1u) {
            full |= std::uint64_t{1} << bp.keep_pos[static_cast<std::size_t>(k)];
        }
    }
    for (int t = 0; t < bp.n_trace; ++t) {
        if (traced >> (bp.n_trace - 1 - t) & 1u) {
            full |= std::uint64_t{1} << bp.trace_pos[static_cast<std::size_t>(t)];
        }
    }
    return full;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<int>& keep) {
    const Bipartition bp = split_register(rho.n_qbits(), keep);
    const std::size_t dk = std::size_t{1} << bp.n_keep;
    const std::size_t dt = std::size_t{1} << bp.n_trace;

    ComplexMatrix out(dk);
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            cplx s{0.0, 0.0};
            for (std::size_t t = 0; t < dt; ++t) {
                s += rho.entry(assemble_index(bp, i, t), assemble_index(bp, j, t));
            }
            out.at(i, j) = s;
        }
    }
    return DensityMatrix(bp.n_keep, std::move(out));
}

DensityMatrix reduced_density(const StateVector& s, const std::set<int>& keep) {
    const Bipartition bp = split_register(s.n_qbits(), keep);
    const std::size_t dk = std::size_t{1} << bp.n_keep;
    const std::size_t dt = std::size_t{1} << bp.n_trace;

    ComplexMatrix out(dk);
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            cplx v{0.0, 0.0};
            for (std::size_t t = 0; t < dt; ++t) {
                v += s.amplitude(assemble_index(bp, i, t)) *
                     std::conj(s.amplitude(assemble_index(bp, j, t)));
            }
            out.at(i, j) = v;
        }
    }
    return DensityMatrix(bp.n_keep, std::move(out));
}

bool is_product_state(const StateVector& s, int cut) {
    if (cut < 1 || cut >= s.n_qbits()) {
        throw std::invalid_argument("bipartition cut must satisfy 1 <= cut < N");
    }
    std::set<int> left;
    for (int q = 1; q <= cut; ++q) left.insert(q);
    return reduced_density(s, left).purity() >= 1.0 - 1e-9;
}

std::vector<MeasurementOutcome> measure_all(const StateVector& s) {
    std::vector<MeasurementOutcome> outcomes;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const double p = s.probability(i);
        if (p > 0.0) {
            outcomes.push_back({i, p, StateVector::basis(s.n_qbits(), i)});
        }
    }
    return outcomes;
}

std::string to_json_text(const StateVector& s) {
    std::string out = "{\"n\":";
    out += std::to_string(s.n_qbits());
    out += ",\"amplitudes\":[";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i) out += ',';
        out += '[';
        out += jsontext::number(s.amplitude(i).real());
        out += ',';
        out += jsontext::number(s.amplitude(i).imag());
        out += ']';
    }
    out += "]}";
    return out;
}

StateVector state_from_json_text(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes")) {
        throw std::invalid_argument("state JSON must carry \"n\" and \"amplitudes\"");
    }
    const int n = j.at("n").get<int>();
    const auto& arr = j.at("amplitudes");
    if (!arr.is_array()) {
        throw std::invalid_argument("\"amplitudes\" must be an array");
    }
    std::vector<cplx> amps;
    amps.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("amplitude entries must be [re, im] pairs");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

}  // namespace qdesk
