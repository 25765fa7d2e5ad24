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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dds/allocation.hpp"
#include "dds/calibration.hpp"
#include "dds/noise.hpp"
#include "dds/training.hpp"
#include "json.hpp"

namespace dds {

/// Validation failure in a run configuration. The message names the field.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct CalibrationConfig {
    CalibrationOptions options;
    std::vector<TargetSpec> family = default_calibration_family();
    std::vector<std::size_t> hellinger_qubits = {2, 4, 6, 8};
    std::vector<std::uint64_t> hellinger_shots = {100, 1000, 10000, 100000};
    std::uint64_t hellinger_trials = 50;
};

struct SweepKConfig {
    std::vector<double> k_values = {1, 2, 4, 8, 16, 32, 64};
    std::uint64_t cap = kDdsMCap;
};

struct RunConfig {
    std::optional<Problem> problem;
    std::vector<ShotPolicy> policies;
    std::optional<NoiseModel> noise;
    TrainOptions train;
    std::vector<std::uint64_t> seeds;
    std::filesystem::path out = "results";
    std::size_t jobs = 1;
    CalibrationConfig calibration;
    SweepKConfig sweep_k;
};

/// Relative file references resolve against `base_dir`; the stored
/// provenance keeps the path as written.
RunConfig parse_run_config(const nlohmann::json &j, const std::filesystem::path &base_dir = ".");
RunConfig load_run_config(const std::filesystem::path &path);

/// "none" gives nullopt; otherwise a preset name.
std::optional<NoiseModel> parse_noise_name(const std::string &name);

Problem load_problem(const nlohmann::json &j, const std::filesystem::path &base_dir);

/// Throws ConfigError unless a problem, at least one policy and one seed exist.
void validate_for_training(const RunConfig &config);

}  // namespace dds
