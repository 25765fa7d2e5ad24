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

#include "dds/noise.hpp"

#include <algorithm>
#include <stdexcept>

#include "dds/rng.hpp"

namespace dds {

namespace {

struct ErrorEvent {
    std::size_t gate_index;
    int pauli;  // 1..3 for 1-qubit gates, 1..15 (low two bits = first target) for 2-qubit gates
};

}  // namespace

NoiseModel::NoiseModel(double p1_, double p2_, std::string label_) : p1(p1_), p2(p2_), label(std::move(label_)) {
    if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0)) {
        throw std::invalid_argument("depolarizing probabilities must lie in [0, 1]");
    }
}

std::vector<NoiseModel> builtin_noise_presets() {
    return {
        NoiseModel(2.5e-4, 2.5e-3, "heron"),
        NoiseModel(5e-4, 8e-3, "eagle"),
    };
}

std::optional<NoiseModel> find_noise_preset(std::string_view name) {
    for (auto &preset : builtin_noise_presets()) {
        if (preset.label == name) {
            return preset;
        }
    }
    return std::nullopt;
}

TrajectoryPlan plan_trajectories(std::uint64_t batch, std::uint64_t shots) {
    if (batch < 1) {
        throw std::invalid_argument("trajectory batch must be >= 1");
    }
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (batch >= shots) {
        return {1, shots, batch > shots};
    }
    return {(shots + batch - 1) / batch, batch, false};
}

std::uint64_t trajectories_per_batch(std::uint64_t batch, std::uint64_t shots) {
    return plan_trajectories(batch, shots).trajectories;
}

Counts sample_counts_noisy(const Circuit &circuit, std::span<const double> parameters, std::uint64_t shots,
                           const NoiseModel &noise, std::uint64_t seed, std::uint64_t batch) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const TrajectoryPlan plan = plan_trajectories(batch, shots);
    const QuantumState ideal = run_circuit(circuit, parameters);
    const std::vector<double> ideal_probs = exact_distribution(ideal);
    // Validates normalization the same way the noiseless path does.
    const ProbDist ideal_dist(ideal_probs);
    const OutcomeSampler ideal_sampler(ideal_dist.probabilities());

    Rng measure(derive_seed(seed, Stream::measure));
    Rng noise_rng(derive_seed(seed, Stream::noise));
    std::vector<std::uint64_t> dense(ideal.dimension(), 0);
    std::vector<ErrorEvent> events;
    const auto gates = circuit.gates();

    std::uint64_t remaining = shots;
    for (std::uint64_t t = 0; t < plan.trajectories; ++t) {
        const std::uint64_t n_shots = std::min(plan.shots_per_trajectory, remaining);
        remaining -= n_shots;

        events.clear();
        for (std::size_t g = 0; g < gates.size(); ++g) {
            const bool two_qubit = gate_arity(gates[g].kind) == 2;
            const double p = two_qubit ? noise.p2 : noise.p1;
            if (p > 0.0 && noise_rng.uniform() < p) {
                const int pauli = two_qubit ? static_cast<int>(noise_rng.below(15)) + 1
                                            : static_cast<int>(noise_rng.below(3)) + 1;
                events.push_back({g, pauli});
            }
        }

        if (events.empty()) {
            for (std::uint64_t s = 0; s < n_shots; ++s) {
                ++dense[ideal_sampler.draw(measure.uniform())];
            }
            continue;
        }

        QuantumState state(circuit.n_qubits());
        auto next_event = events.begin();
        for (std::size_t g = 0; g < gates.size(); ++g) {
            state.apply(gates[g], gate_angle(gates[g], parameters));
            for (; next_event != events.end() && next_event->gate_index == g; ++next_event) {
                const auto &targets = gates[g].targets;
                if (targets.size() == 2) {
                    state.apply_pauli(targets[0], next_event->pauli & 3);
                    state.apply_pauli(targets[1], next_event->pauli >> 2);
                } else {
                    state.apply_pauli(targets[0], next_event->pauli);
                }
            }
        }
        const std::vector<double> probs = exact_distribution(state);
        const OutcomeSampler sampler(probs);
        for (std::uint64_t s = 0; s < n_shots; ++s) {
            ++dense[sampler.draw(measure.uniform())];
        }
    }

    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) {
            hist.emplace_hint(hist.end(), i, dense[i]);
        }
    }
    return Counts(circuit.n_qubits(), std::move(hist));
}

}  // namespace dds
