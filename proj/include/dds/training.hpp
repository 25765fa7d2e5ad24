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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dds/allocation.hpp"
#include "dds/ansatz.hpp"
#include "dds/graphs.hpp"
#include "dds/noise.hpp"
#include "dds/optimizer.hpp"
#include "json.hpp"

namespace dds {

struct QaoaProblem {
    GraphInstance instance;
    std::size_t layers = 1;
    std::string instance_file;  // provenance only
};

struct HamiltonianProblem {
    Observable observable;
    std::size_t layers = 1;
    std::optional<double> reference_energy;
    std::string source_file;  // provenance only
};

using Problem = std::variant<QaoaProblem, HamiltonianProblem>;

std::size_t problem_qubits(const Problem &problem);
/// E_ideal: −(brute-force max cut) for QAOA, the reference energy otherwise.
std::optional<double> ideal_energy(const Problem &problem);

struct TrainOptions {
    OptimizerOptions optimizer;
    std::optional<std::vector<double>> initial_parameters;  // default: uniform [−π, π) from the seed
    std::uint64_t trajectory_batch = 1;
    EntropySource entropy_source = EntropySource::z_group;
    std::uint64_t final_shots = 1024;
};

struct IterationRecord {
    std::uint64_t iteration = 0;
    std::uint64_t shots = 0;
    double entropy_bits = 0.0;
    double cost = 0.0;
    std::vector<double> parameters;
    double wall_time_s = 0.0;  // kept out of the data file
};

struct FinalEvaluation {
    std::uint64_t shots = 0;
    double cost = 0.0;
    double entropy_bits = 0.0;
    std::vector<double> parameters;
};

struct TrainLog {
    std::vector<IterationRecord> records;
    FinalEvaluation final_evaluation;
    std::uint64_t s_tot = 0;
    std::uint64_t i_tot = 0;

    std::uint64_t seed = 0;
    ShotPolicy policy;  // k resolved
    nlohmann::json problem;
    std::string noise_label = "none";
    std::optional<NoiseModel> noise;
    std::string optimizer = std::string(kOptimizerName);
    OptimizerOptions optimizer_options;
    bool converged = false;
    std::uint64_t trajectory_batch = 1;
    std::uint64_t clamped_trajectory_iterations = 0;
    std::size_t n_qubits = 0;
    std::size_t n_parameters = 0;
    std::vector<double> initial_parameters;
    std::optional<double> e_ideal;

    double s_avg() const { return i_tot == 0 ? 0.0 : static_cast<double>(s_tot) / static_cast<double>(i_tot); }
    /// ARG of the final evaluation, when E_ideal is known and nonzero.
    std::optional<double> arg() const;
};

/// Runs the shot-adaptive training loop. Iteration i (one objective
/// evaluation) draws next_shots(policy, i, H_{i−1}) shots, estimates the cost
/// from those counts, and stores H_i = entropy(counts) for iteration i+1.
/// After the optimizer stops, the best parameters are re-evaluated once with
/// `options.final_shots` shots.
TrainLog train(const Problem &problem, const ShotPolicy &policy, const std::optional<NoiseModel> &noise,
               const TrainOptions &options, std::uint64_t seed);

/// 100·|(e_ideal − e_real)/e_ideal|; throws when e_ideal is zero.
double arg_metric(double e_ideal, double e_real);

/// Throws std::logic_error if S_tot, I_tot and the records disagree.
void check_log_invariants(const TrainLog &log);

nlohmann::json problem_to_json(const Problem &problem);

/// Full log without timing information (reproducible byte for byte).
nlohmann::json train_log_to_json(const TrainLog &log);
TrainLog train_log_from_json(const nlohmann::json &j);
/// Sidecar with per-iteration wall times.
nlohmann::json train_log_timing_json(const TrainLog &log);
/// iteration,shots,entropy,cost
std::string train_log_to_csv(const TrainLog &log);

}  // namespace dds
