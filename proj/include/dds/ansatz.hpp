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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dds/graphs.hpp"
#include "dds/sampling.hpp"
#include "dds/statevector.hpp"

namespace dds {

/// QAOA max-cut circuit: H on every qubit, then per layer l an RZZ(2·γ_l·w)
/// for each edge followed by RX(2·β_l) on each qubit. Parameter vector is
/// [γ_0 … γ_{L-1}, β_0 … β_{L-1}].
Circuit build_qaoa_circuit(const WeightedGraph &graph, std::size_t layers);

/// Negated average cut over the sampled assignments.
double qaoa_cost_from_counts(const Counts &counts, const WeightedGraph &graph);
/// Same, with precomputed all_cut_values(graph).
double qaoa_cost_from_counts(const Counts &counts, std::span<const double> cut_table);

/// Infinite-shot cost −Σ_z |amp_z|²·cut(z).
double exact_qaoa_cost(const QuantumState &state, const WeightedGraph &graph);

/// Per layer: RY then RZ on each qubit, then CNOT(q, q+1) for q = 0..n-2.
/// Parameters are layer-major, qubit-major, RY before RZ.
Circuit build_hw_efficient_circuit(std::size_t n_qubits, std::size_t layers);

/// One Pauli term. `paulis` uses the same right-to-left order as bitstrings:
/// the last character acts on qubit 0.
struct PauliTerm {
    double coefficient = 0.0;
    std::string paulis;

    /// Operator on qubit q ('I', 'X', 'Y' or 'Z').
    char on_qubit(std::size_t q) const { return paulis[paulis.size() - 1 - q]; }
    bool operator==(const PauliTerm &) const = default;
};

class Observable {
   public:
    /// Merges duplicate strings (first occurrence fixes the position) and
    /// validates the alphabet and a common length.
    Observable(std::vector<PauliTerm> terms, double constant_offset = 0.0);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm> &terms() const { return terms_; }
    double constant_offset() const { return offset_; }
    bool is_diagonal() const;

   private:
    std::size_t n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
    double offset_ = 0.0;
};

/// Text format: one `<coefficient> <pauli-string>` per line, optional
/// `offset <value>` line, `#` starts a comment, blank lines ignored.
Observable parse_hamiltonian(std::string_view text);

/// Qubit-wise commuting group. `basis[q]` is 'X', 'Y', 'Z' or 'I' (unused).
/// The rotation maps that basis onto the computational basis: H for X and
/// RX(π/2) for Y; its angles live in `rotation_angles`.
struct MeasurementGroup {
    std::string basis;  // indexed by qubit
    std::vector<std::size_t> member_terms;
    Circuit rotation;
    std::vector<double> rotation_angles;

    bool is_computational() const;
};

/// Greedy first-fit grouping in term order.
std::vector<MeasurementGroup> group_terms(const Observable &observable);

/// ⟨term⟩ estimated from counts measured in a basis compatible with the term.
double term_expectation(const PauliTerm &term, const Counts &counts);

/// Which group's counts drive entropy feedback.
enum class EntropySource { z_group, max_over_groups };

struct GroupMeasurement {
    double expectation = 0.0;
    Counts primary_counts;
    std::vector<Counts> group_counts;
};

/// Σ coeff·⟨term⟩ + offset from per-group counts (same order as `groups`).
double combine_group_estimates(const Observable &observable, const std::vector<MeasurementGroup> &groups,
                               const std::vector<Counts> &group_counts);

/// Counts used for entropy feedback: the computational-basis group if one
/// exists (otherwise the first group), or the highest-entropy group.
const Counts &select_primary_counts(const std::vector<MeasurementGroup> &groups, const std::vector<Counts> &group_counts,
                                    EntropySource source);

/// Shot count of group g when `shots` are split evenly, remainder going to the
/// earliest groups.
std::uint64_t group_shots(std::uint64_t shots, std::size_t n_groups, std::size_t g);

/// Groups the observable, splits shots, rotates and samples each group
/// (seed per group derived from `seed`), and combines the estimates.
GroupMeasurement group_and_measure(const QuantumState &state, const Observable &observable, std::uint64_t shots,
                                   std::uint64_t seed, EntropySource source = EntropySource::z_group);

}  // namespace dds
