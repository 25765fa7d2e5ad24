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
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "dds/config.hpp"
#include "dds/report.hpp"

namespace dds {

/// Runs fn(0..n-1) on `jobs` worker threads. If any call throws, the
/// exception of the lowest failing index is rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)> &fn);

/// File-name-safe form of a policy label.
std::string sanitize_label(const std::string &label);

/// One TrainLog per (policy, seed), written to <out>/logs/ as JSON and CSV,
/// then summary.csv, policy_summary.csv, comparison.csv (when a fixed
/// baseline is present) and the run_meta.json sidecar.
std::vector<TrainLog> run_train(const RunConfig &config);

/// calibration.csv, calibration_fit.json, hellinger.csv, run_meta.json.
std::vector<CalibrationPoint> run_calibrate(const RunConfig &config);

struct SweepKRow {
    double k = 0.0;
    std::size_t seeds = 0;
    double s_tot = 0.0;
    double s_tot_se = 0.0;
    double final_cost = 0.0;
    double final_cost_se = 0.0;
    std::optional<double> arg;
};

/// One DDS run per (k, seed) with the sweep cap; sweep_k.csv holds the
/// per-k means, sweep_k_runs.csv the individual runs.
std::vector<SweepKRow> run_sweep_k(const RunConfig &config, const ShotPolicy &base_policy);

/// Reads TrainLog JSON files (directories are searched for *.json logs),
/// writes comparison.csv under `out` and returns its contents.
std::string run_compare(const std::vector<std::filesystem::path> &inputs, const std::filesystem::path &out,
                        const std::string &baseline);

/// Writes <out>/<model>_n<n>_seed<seed>.json and returns its path.
std::filesystem::path run_gen_graph(const GraphInstance &instance, const std::filesystem::path &out);

}  // namespace dds
