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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/// Dense statevector simulation of small parameterized circuits.
///
/// Bit convention (shared by every module): qubit q is bit q of the basis-state
/// index, i.e. qubit 0 is the least significant bit. When a basis state is
/// printed as a bitstring, the rightmost character is qubit 0.
namespace dds {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 16;

enum class GateKind { H, X, Y, Z, RX, RY, RZ, RZZ, CNOT };

std::string_view gate_name(GateKind kind);
bool is_parameterized(GateKind kind);
std::size_t gate_arity(GateKind kind);

/// One gate of a circuit. For rotation kinds the applied angle is
/// `scale * parameters[*parameter_slot]`; `scale` lets QAOA encode 2·w·γ with a
/// single shared γ slot. For CNOT, targets = {control, target}.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<std::size_t> targets;
    std::optional<std::size_t> parameter_slot;
    double scale = 1.0;

    static Gate fixed(GateKind kind, std::vector<std::size_t> targets);
    static Gate rotation(GateKind kind, std::vector<std::size_t> targets, std::size_t slot, double scale = 1.0);

    bool operator==(const Gate &) const = default;
};

/// Immutable ordered gate list. Validated on construction.
class Circuit {
   public:
    Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::size_t n_parameters);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t n_parameters() const { return n_parameters_; }
    std::span<const Gate> gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// `first` followed by `second`; parameter slots of `second` are shifted
    /// past those of `first`, so the combined parameter vector is the
    /// concatenation of both.
    static Circuit concat(const Circuit &first, const Circuit &second);

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::size_t n_parameters_;
};

/// Convenience builder; gates are appended in call order.
class CircuitBuilder {
   public:
    explicit CircuitBuilder(std::size_t n_qubits) : n_qubits_(n_qubits) {}

    /// Reserves a fresh parameter slot and returns its index.
    std::size_t new_parameter() { return n_parameters_++; }

    CircuitBuilder &h(std::size_t q);
    CircuitBuilder &x(std::size_t q);
    CircuitBuilder &y(std::size_t q);
    CircuitBuilder &z(std::size_t q);
    CircuitBuilder &cnot(std::size_t control, std::size_t target);
    CircuitBuilder &rx(std::size_t q, std::size_t slot, double scale = 1.0);
    CircuitBuilder &ry(std::size_t q, std::size_t slot, double scale = 1.0);
    CircuitBuilder &rz(std::size_t q, std::size_t slot, double scale = 1.0);
    CircuitBuilder &rzz(std::size_t a, std::size_t b, std::size_t slot, double scale = 1.0);
    CircuitBuilder &add(Gate gate);

    Circuit build() const { return Circuit(n_qubits_, gates_, n_parameters_); }

   private:
    std::size_t n_qubits_;
    std::size_t n_parameters_ = 0;
    std::vector<Gate> gates_;
};

class QuantumState {
   public:
    /// |0...0> on n qubits.
    explicit QuantumState(std::size_t n_qubits);
    /// Takes ownership of explicit amplitudes; length must be a power of two
    /// and the vector must be normalized within 1e-10.
    static QuantumState from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    double norm_squared() const;

    /// In-place gate application. `angle` must be present iff the gate kind is
    /// a rotation; it is the final angle (scale already applied).
    void apply(const Gate &gate, std::optional<double> angle = std::nullopt);

    /// In-place application of a single-qubit Pauli (1 = X, 2 = Y, 3 = Z;
    /// 0 is identity). Used for noise insertion.
    void apply_pauli(std::size_t qubit, int pauli);

    bool operator==(const QuantumState &) const = default;

   private:
    QuantumState(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    std::size_t n_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Returns `state` transformed by `gate` (value semantics).
QuantumState apply_gate(QuantumState state, const Gate &gate, std::optional<double> angle = std::nullopt);

/// Angle a gate receives from a parameter vector, or nullopt for fixed gates.
std::optional<double> gate_angle(const Gate &gate, std::span<const double> parameters);

/// Applies every gate of `circuit` to `state` in order.
QuantumState apply_circuit(QuantumState state, const Circuit &circuit, std::span<const double> parameters);

/// Runs `circuit` on |0...0>.
QuantumState run_circuit(const Circuit &circuit, std::span<const double> parameters);

/// |amplitude_i|^2 for every basis state i.
std::vector<double> exact_distribution(const QuantumState &state);

/// Formats a basis-state index as an n-character bitstring, qubit 0 rightmost.
std::string format_bitstring(std::uint64_t index, std::size_t n_bits);

}  // namespace dds
