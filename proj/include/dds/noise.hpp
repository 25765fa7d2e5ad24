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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dds/sampling.hpp"
#include "dds/statevector.hpp"

namespace dds {

/// Gate depolarizing probabilities: after a 1-qubit gate a uniformly random
/// non-identity Pauli hits the target with probability p1; after a 2-qubit
/// gate one of the 15 non-identity two-qubit Paulis hits with probability p2.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    std::string label;

    NoiseModel() = default;
    NoiseModel(double p1_, double p2_, std::string label_ = {});

    bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0; }
};

/// Built-in presets. Representative magnitudes only; they are not calibrated
/// against any particular device.
std::vector<NoiseModel> builtin_noise_presets();
std::optional<NoiseModel> find_noise_preset(std::string_view name);

struct TrajectoryPlan {
    std::uint64_t trajectories = 1;
    std::uint64_t shots_per_trajectory = 1;
    bool clamped = false;  // batch exceeded the shot count
};

/// How many noise realizations a shot batch uses when `batch` consecutive
/// shots share one realization.
TrajectoryPlan plan_trajectories(std::uint64_t batch, std::uint64_t shots);
std::uint64_t trajectories_per_batch(std::uint64_t batch, std::uint64_t shots);

/// Trajectory sampler. Measurement randomness follows sample_counts exactly
/// (k-th shot uses the k-th uniform of the measure stream); noise draws come
/// from a separate stream. With p1 = p2 = 0 the result therefore equals
/// sample_counts(run_circuit(circuit, parameters), shots, seed) bit for bit.
Counts sample_counts_noisy(const Circuit &circuit, std::span<const double> parameters, std::uint64_t shots,
                           const NoiseModel &noise, std::uint64_t seed, std::uint64_t batch = 1);

}  // namespace dds
