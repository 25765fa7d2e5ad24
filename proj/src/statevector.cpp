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

#include "dds/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dds {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit_count(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

void validate_gate(const Gate &gate, std::size_t n_qubits) {
    if (gate.targets.size() != gate_arity(gate.kind)) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + " expects " +
                                    std::to_string(gate_arity(gate.kind)) + " target(s)");
    }
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
        if (gate.targets[i] >= n_qubits) {
            throw std::out_of_range(std::string(gate_name(gate.kind)) + " target " +
                                    std::to_string(gate.targets[i]) + " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.targets[i] == gate.targets[j]) {
                throw std::invalid_argument(std::string(gate_name(gate.kind)) + " targets must be distinct");
            }
        }
    }
    if (is_parameterized(gate.kind) != gate.parameter_slot.has_value()) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                    (gate.parameter_slot ? " takes no parameter slot" : " requires a parameter slot"));
    }
}

// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to qubit q.
void apply_1q(std::vector<Amplitude> &amps, std::size_t q, Amplitude m00, Amplitude m01, Amplitude m10,
              Amplitude m11) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
        for (std::size_t i = base; i < base + bit; ++i) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i | bit];
            amps[i] = m00 * a0 + m01 * a1;
            amps[i | bit] = m10 * a0 + m11 * a1;
        }
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::RZZ:
            return "RZZ";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

bool is_parameterized(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::RZZ;
}

std::size_t gate_arity(GateKind kind) { return (kind == GateKind::RZZ || kind == GateKind::CNOT) ? 2 : 1; }

Gate Gate::fixed(GateKind kind, std::vector<std::size_t> targets) {
    return Gate{kind, std::move(targets), std::nullopt, 1.0};
}

Gate Gate::rotation(GateKind kind, std::vector<std::size_t> targets, std::size_t slot, double scale) {
    return Gate{kind, std::move(targets), slot, scale};
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::size_t n_parameters)
    : n_qubits_(n_qubits), gates_(std::move(gates)), n_parameters_(n_parameters) {
    check_qubit_count(n_qubits_);
    for (const auto &g : gates_) {
        validate_gate(g, n_qubits_);
        if (g.parameter_slot && *g.parameter_slot >= n_parameters_) {
            throw std::out_of_range("parameter slot " + std::to_string(*g.parameter_slot) + " >= n_parameters " +
                                    std::to_string(n_parameters_));
        }
    }
}

Circuit Circuit::concat(const Circuit &first, const Circuit &second) {
    if (first.n_qubits() != second.n_qubits()) {
        throw std::invalid_argument("cannot concatenate circuits of different widths");
    }
    std::vector<Gate> gates = first.gates_;
    gates.reserve(first.gates_.size() + second.gates_.size());
    for (Gate g : second.gates_) {
        if (g.parameter_slot) {
            *g.parameter_slot += first.n_parameters_;
        }
        gates.push_back(std::move(g));
    }
    return Circuit(first.n_qubits_, std::move(gates), first.n_parameters_ + second.n_parameters_);
}

CircuitBuilder &CircuitBuilder::h(std::size_t q) { return add(Gate::fixed(GateKind::H, {q})); }
CircuitBuilder &CircuitBuilder::x(std::size_t q) { return add(Gate::fixed(GateKind::X, {q})); }
CircuitBuilder &CircuitBuilder::y(std::size_t q) { return add(Gate::fixed(GateKind::Y, {q})); }
CircuitBuilder &CircuitBuilder::z(std::size_t q) { return add(Gate::fixed(GateKind::Z, {q})); }
CircuitBuilder &CircuitBuilder::cnot(std::size_t control, std::size_t target) {
    return add(Gate::fixed(GateKind::CNOT, {control, target}));
}
CircuitBuilder &CircuitBuilder::rx(std::size_t q, std::size_t slot, double scale) {
    return add(Gate::rotation(GateKind::RX, {q}, slot, scale));
}
CircuitBuilder &CircuitBuilder::ry(std::size_t q, std::size_t slot, double scale) {
    return add(Gate::rotation(GateKind::RY, {q}, slot, scale));
}
CircuitBuilder &CircuitBuilder::rz(std::size_t q, std::size_t slot, double scale) {
    return add(Gate::rotation(GateKind::RZ, {q}, slot, scale));
}
CircuitBuilder &CircuitBuilder::rzz(std::size_t a, std::size_t b, std::size_t slot, double scale) {
    return add(Gate::rotation(GateKind::RZZ, {a, b}, slot, scale));
}
CircuitBuilder &CircuitBuilder::add(Gate gate) {
    gates_.push_back(std::move(gate));
    return *this;
}

QuantumState::QuantumState(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

QuantumState QuantumState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("amplitude vector length must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    check_qubit_count(n);
    double norm = 0.0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return QuantumState(n, std::move(amplitudes));
}

double QuantumState::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void QuantumState::apply(const Gate &gate, std::optional<double> angle) {
    validate_gate(gate, n_qubits_);
    if (is_parameterized(gate.kind) != angle.has_value()) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                    (angle ? " takes no angle" : " requires an angle"));
    }
    const std::size_t q = gate.targets[0];
    const Amplitude i1{0.0, 1.0};
    switch (gate.kind) {
        case GateKind::H:
            apply_1q(amplitudes_, q, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
            return;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            apply_pauli(q, gate.kind == GateKind::X ? 1 : gate.kind == GateKind::Y ? 2 : 3);
            return;
        case GateKind::RX: {
            const double c = std::cos(*angle / 2), s = std::sin(*angle / 2);
            apply_1q(amplitudes_, q, c, -i1 * s, -i1 * s, c);
            return;
        }
        case GateKind::RY: {
            const double c = std::cos(*angle / 2), s = std::sin(*angle / 2);
            apply_1q(amplitudes_, q, c, -s, s, c);
            return;
        }
        case GateKind::RZ: {
            const Amplitude lo = std::polar(1.0, -*angle / 2), hi = std::polar(1.0, *angle / 2);
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
                amplitudes_[i] *= (i & bit) ? hi : lo;
            }
            return;
        }
        case GateKind::RZZ: {
            // exp(-i θ/2 Z⊗Z): phase depends on the parity of the two bits.
            const Amplitude even = std::polar(1.0, -*angle / 2), odd = std::polar(1.0, *angle / 2);
            const std::size_t a = std::size_t{1} << gate.targets[0];
            const std::size_t b = std::size_t{1} << gate.targets[1];
            for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
                const bool parity = ((i & a) != 0) != ((i & b) != 0);
                amplitudes_[i] *= parity ? odd : even;
            }
            return;
        }
        case GateKind::CNOT: {
            const std::size_t c = std::size_t{1} << gate.targets[0];
            const std::size_t t = std::size_t{1} << gate.targets[1];
            for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
                if ((i & c) && !(i & t)) {
                    std::swap(amplitudes_[i], amplitudes_[i | t]);
                }
            }
            return;
        }
    }
}

void QuantumState::apply_pauli(std::size_t qubit, int pauli) {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("pauli target out of range");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const Amplitude i1{0.0, 1.0};
    switch (pauli) {
        case 0:
            return;
        case 1:
            for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
                if (!(i & bit)) {
                    std::swap(amplitudes_[i], amplitudes_[i | bit]);
                }
            }
            return;
        case 2:
            for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
                if (!(i & bit)) {
                    const Amplitude a0 = amplitudes_[i];
                    amplitudes_[i] = -i1 * amplitudes_[i | bit];
                    amplitudes_[i | bit] = i1 * a0;
                }
            }
            return;
        case 3:
            for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
                if (i & bit) {
                    amplitudes_[i] = -amplitudes_[i];
                }
            }
            return;
        default:
            throw std::invalid_argument("pauli index must be in 0..3");
    }
}

QuantumState apply_gate(QuantumState state, const Gate &gate, std::optional<double> angle) {
    state.apply(gate, angle);
    return state;
}

std::optional<double> gate_angle(const Gate &gate, std::span<const double> parameters) {
    if (!gate.parameter_slot) {
        return std::nullopt;
    }
    return gate.scale * parameters[*gate.parameter_slot];
}

QuantumState apply_circuit(QuantumState state, const Circuit &circuit, std::span<const double> parameters) {
    if (parameters.size() != circuit.n_parameters()) {
        throw std::invalid_argument("expected " + std::to_string(circuit.n_parameters()) + " parameters, got " +
                                    std::to_string(parameters.size()));
    }
    if (state.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("state and circuit widths differ");
    }
    for (const auto &g : circuit.gates()) {
        state.apply(g, gate_angle(g, parameters));
    }
    return state;
}

QuantumState run_circuit(const Circuit &circuit, std::span<const double> parameters) {
    return apply_circuit(QuantumState(circuit.n_qubits()), circuit, parameters);
}

std::vector<double> exact_distribution(const QuantumState &state) {
    std::vector<double> probs(state.dimension());
    std::transform(state.amplitudes().begin(), state.amplitudes().end(), probs.begin(),
                   [](const Amplitude &a) { return std::norm(a); });
    return probs;
}

std::string format_bitstring(std::uint64_t index, std::size_t n_bits) {
    std::string out(n_bits, '0');
    for (std::size_t q = 0; q < n_bits; ++q) {
        if ((index >> q) & 1U) {
            out[n_bits - 1 - q] = '1';
        }
    }
    return out;
}

}  // namespace dds
