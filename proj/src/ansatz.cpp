// Copyright 2026 The DDS Workbench Authors
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

#include "dds/ansatz.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dds/rng.hpp"

namespace dds {

Circuit build_qaoa_circuit(const WeightedGraph &graph, std::size_t layers) {
    if (layers < 1) {
        throw std::invalid_argument("QAOA needs at least one layer");
    }
    if (graph.edges().empty()) {
        throw std::invalid_argument("QAOA needs a graph with at least one edge");
    }
    const std::size_t n = graph.n_nodes();
    CircuitBuilder b(n);
    std::vector<std::size_t> gammas, betas;
    for (std::size_t l = 0; l < layers; ++l) {
        gammas.push_back(b.new_parameter());
    }
    for (std::size_t l = 0; l < layers; ++l) {
        betas.push_back(b.new_parameter());
    }
    for (std::size_t q = 0; q < n; ++q) {
        b.h(q);
    }
    for (std::size_t l = 0; l < layers; ++l) {
        for (const auto &e : graph.edges()) {
            b.rzz(e.u, e.v, gammas[l], 2.0 * e.weight);
        }
        for (std::size_t q = 0; q < n; ++q) {
            b.rx(q, betas[l], 2.0);
        }
    }
    return b.build();
}

double qaoa_cost_from_counts(const Counts &counts, std::span<const double> cut_table) {
    if (cut_table.size() != (std::size_t{1} << counts.n_qubits())) {
        throw std::invalid_argument("counts width does not match graph size");
    }
    double sum = 0.0;
    for (const auto &[z, c] : counts.histogram()) {
        sum += static_cast<double>(c) * cut_table[z];
    }
    return -sum / static_cast<double>(counts.total_shots());
}

double qaoa_cost_from_counts(const Counts &counts, const WeightedGraph &graph) {
    if (counts.n_qubits() != graph.n_nodes()) {
        throw std::invalid_argument("counts cover " + std::to_string(counts.n_qubits()) + " qubits but graph has " +
                                    std::to_string(graph.n_nodes()) + " nodes");
    }
    double sum = 0.0;
    for (const auto &[z, c] : counts.histogram()) {
        sum += static_cast<double>(c) * cut_value(graph, z);
    }
    return -sum / static_cast<double>(counts.total_shots());
}

double exact_qaoa_cost(const QuantumState &state, const WeightedGraph &graph) {
    if (state.n_qubits() != graph.n_nodes()) {
        throw std::invalid_argument("state width does not match graph size");
    }
    const auto amps = state.amplitudes();
    double sum = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        sum += std::norm(amps[z]) * cut_value(graph, z);
    }
    return -sum;
}

Circuit build_hw_efficient_circuit(std::size_t n_qubits, std::size_t layers) {
    if (layers < 1) {
        throw std::invalid_argument("hardware-efficient ansatz needs at least one layer");
    }
    CircuitBuilder b(n_qubits);
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            b.ry(q, b.new_parameter());
            b.rz(q, b.new_parameter());
        }
        for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
            b.cnot(q, q + 1);
        }
    }
    return b.build();
}

Observable::Observable(std::vector<PauliTerm> terms, double constant_offset) : offset_(constant_offset) {
    if (terms.empty()) {
        throw std::invalid_argument("observable has no terms");
    }
    n_qubits_ = terms.front().paulis.size();
    if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
        throw std::invalid_argument("pauli string length must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    for (auto &t : terms) {
        if (t.paulis.size() != n_qubits_) {
            throw std::invalid_argument("pauli strings have inconsistent lengths (" + std::to_string(n_qubits_) +
                                        " vs " + std::to_string(t.paulis.size()) + ")");
        }
        for (char &c : t.paulis) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw std::invalid_argument("invalid pauli character in '" + t.paulis + "'");
            }
        }
        auto existing = std::find_if(terms_.begin(), terms_.end(),
                                     [&](const PauliTerm &other) { return other.paulis == t.paulis; });
        if (existing != terms_.end()) {
            existing->coefficient += t.coefficient;
        } else {
            terms_.push_back(t);
        }
    }
}

bool Observable::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm &t) {
        return t.paulis.find_first_of("XY") == std::string::npos;
    });
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::size_t line_no) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": cannot parse number '" +
                                    std::string(token) + "'");
    }
    return value;
}

}  // namespace

Observable parse_hamiltonian(std::string_view text) {
    std::vector<PauliTerm> terms;
    double offset = 0.0;
    bool have_offset = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '<coefficient> <pauli-string>'");
        }
        const std::string_view first = line.substr(0, space);
        const std::string_view rest = trim(line.substr(space));
        if (rest.find_first_of(" \t") != std::string_view::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": too many fields");
        }
        if (first == "offset") {
            if (have_offset) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate offset line");
            }
            offset = parse_number(rest, line_no);
            have_offset = true;
            continue;
        }
        PauliTerm term{parse_number(first, line_no), std::string(rest)};
        if (term.paulis.find_first_not_of("IXYZixyz") != std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": invalid pauli string '" + term.paulis +
                                        "'");
        }
        if (!terms.empty() && term.paulis.size() != terms.front().paulis.size()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": pauli string length " +
                                        std::to_string(term.paulis.size()) + " differs from " +
                                        std::to_string(terms.front().paulis.size()));
        }
        terms.push_back(std::move(term));
    }
    if (terms.empty()) {
        throw std::invalid_argument("hamiltonian has no terms");
    }
    return Observable(std::move(terms), offset);
}

bool MeasurementGroup::is_computational() const { return basis.find_first_of("XY") == std::string::npos; }

std::vector<MeasurementGroup> group_terms(const Observable &observable) {
    const std::size_t n = observable.n_qubits();
    std::vector<std::string> bases;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t t = 0; t < observable.terms().size(); ++t) {
        const auto &term = observable.terms()[t];
        bool placed = false;
        for (std::size_t g = 0; g < bases.size() && !placed; ++g) {
            bool compatible = true;
            for (std::size_t q = 0; q < n && compatible; ++q) {
                const char op = term.on_qubit(q);
                compatible = op == 'I' || bases[g][q] == 'I' || bases[g][q] == op;
            }
            if (compatible) {
                for (std::size_t q = 0; q < n; ++q) {
                    if (term.on_qubit(q) != 'I') {
                        bases[g][q] = term.on_qubit(q);
                    }
                }
                members[g].push_back(t);
                placed = true;
            }
        }
        if (!placed) {
            std::string basis(n, 'I');
            for (std::size_t q = 0; q < n; ++q) {
                basis[q] = term.on_qubit(q);
            }
            bases.push_back(std::move(basis));
            members.push_back({t});
        }
    }
    std::vector<MeasurementGroup> groups;
    for (std::size_t g = 0; g < bases.size(); ++g) {
        CircuitBuilder b(n);
        std::vector<double> angles;
        for (std::size_t q = 0; q < n; ++q) {
            if (bases[g][q] == 'X') {
                b.h(q);
            } else if (bases[g][q] == 'Y') {
                b.rx(q, b.new_parameter());
                angles.push_back(std::numbers::pi / 2);
            }
        }
        groups.push_back(MeasurementGroup{bases[g], members[g], b.build(), std::move(angles)});
    }
    return groups;
}

double term_expectation(const PauliTerm &term, const Counts &counts) {
    if (term.paulis.size() != counts.n_qubits()) {
        throw std::invalid_argument("term width does not match counts width");
    }
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < term.paulis.size(); ++q) {
        if (term.on_qubit(q) != 'I') {
            mask |= std::uint64_t{1} << q;
        }
    }
    double sum = 0.0;
    for (const auto &[z, c] : counts.histogram()) {
        const double eig = (std::popcount(z & mask) & 1) ? -1.0 : 1.0;
        sum += eig * static_cast<double>(c);
    }
    return sum / static_cast<double>(counts.total_shots());
}

double combine_group_estimates(const Observable &observable, const std::vector<MeasurementGroup> &groups,
                               const std::vector<Counts> &group_counts) {
    if (groups.size() != group_counts.size()) {
        throw std::invalid_argument("one counts entry per measurement group required");
    }
    double value = observable.constant_offset();
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t t : groups[g].member_terms) {
            const auto &term = observable.terms()[t];
            value += term.coefficient * term_expectation(term, group_counts[g]);
        }
    }
    return value;
}

const Counts &select_primary_counts(const std::vector<MeasurementGroup> &groups, const std::vector<Counts> &group_counts,
                                    EntropySource source) {
    if (group_counts.empty() || groups.size() != group_counts.size()) {
        throw std::invalid_argument("no measurement groups");
    }
    if (source == EntropySource::max_over_groups) {
        std::size_t best = 0;
        double best_h = -1.0;
        for (std::size_t g = 0; g < group_counts.size(); ++g) {
            const double h = entropy(group_counts[g]);
            if (h > best_h) {
                best_h = h;
                best = g;
            }
        }
        return group_counts[best];
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].is_computational()) {
            return group_counts[g];
        }
    }
    return group_counts.front();
}

std::uint64_t group_shots(std::uint64_t shots, std::size_t n_groups, std::size_t g) {
    const std::uint64_t base = shots / n_groups;
    return base + (g < shots % n_groups ? 1 : 0);
}

GroupMeasurement group_and_measure(const QuantumState &state, const Observable &observable, std::uint64_t shots,
                                   std::uint64_t seed, EntropySource source) {
    if (state.n_qubits() != observable.n_qubits()) {
        throw std::invalid_argument("state width does not match observable width");
    }
    const auto groups = group_terms(observable);
    if (shots < groups.size()) {
        throw std::invalid_argument("shots (" + std::to_string(shots) + ") fewer than measurement groups (" +
                                    std::to_string(groups.size()) + ")");
    }
    std::vector<Counts> counts;
    counts.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const QuantumState rotated = apply_circuit(state, groups[g].rotation, groups[g].rotation_angles);
        counts.push_back(sample_counts(rotated, group_shots(shots, groups.size(), g),
                                       derive_seed(seed, Stream::group, {g})));
    }
    const double expectation = combine_group_estimates(observable, groups, counts);
    Counts primary = select_primary_counts(groups, counts, source);
    return GroupMeasurement{expectation, std::move(primary), std::move(counts)};
}

}  // namespace dds
