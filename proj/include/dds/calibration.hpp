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

#include "dds/sampling.hpp"
#include "json.hpp"

namespace dds {

enum class TargetKind { point_mass, uniform, ghz, truncated_uniform, random_circuit, biased_coin };

std::string_view target_kind_name(TargetKind kind);
TargetKind parse_target_kind(std::string_view name);

/// One target distribution on an n-qubit register. `outcomes` is used by
/// truncated_uniform, `depth` and `seed` by random_circuit, `eps` by
/// biased_coin (outcome 1 with probability eps, outcome 0 otherwise).
struct TargetSpec {
    TargetKind kind = TargetKind::uniform;
    std::size_t n_qubits = 1;
    std::uint64_t outcomes = 0;
    std::size_t depth = 1;
    std::uint64_t seed = 0;
    double eps = 0.0;
};

ProbDist make_target(const TargetSpec &spec);
std::vector<ProbDist> make_target_family(const std::vector<TargetSpec> &specs);

TargetSpec target_spec_from_json(const nlohmann::json &j);
nlohmann::json target_spec_to_json(const TargetSpec &spec);

/// Twelve targets on 8 qubits spanning roughly 0.14 to 8 bits.
std::vector<TargetSpec> default_calibration_family();

inline constexpr std::uint64_t kMaxCalibrationShots = 10'000'000;

struct CalibrationOptions {
    double hd_budget = 0.05;
    double confidence = 0.9;
    std::uint64_t trials = 100;
    void validate() const;
};

struct CalibrationPoint {
    double entropy_bits = 0.0;
    std::uint64_t required_shots = 1;
    double target_distance = 0.05;
    double confidence = 0.9;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
};

/// Fraction of `trials` empirical distributions at `shots` within the budget.
double success_fraction(const ProbDist &target, std::uint64_t shots, double hd_budget, std::uint64_t trials,
                        std::uint64_t seed);

/// Smallest S such that at least `confidence` of the trials at S shots land
/// within `hd_budget` of the target. Doubling brackets the answer, then
/// integer bisection narrows it. Throws std::runtime_error past 10^7 shots.
std::uint64_t required_shots(const ProbDist &target, const CalibrationOptions &options, std::uint64_t seed);

/// One point per target; point i uses a seed derived from (seed, i).
std::vector<CalibrationPoint> entropy_shots_sweep(const std::vector<ProbDist> &family,
                                                  const CalibrationOptions &options, std::uint64_t seed);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t n_points = 0;
};

/// Least squares y = slope·x + intercept.
LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y);
/// log2(required_shots) against entropy.
LinearFit fit_calibration(const std::vector<CalibrationPoint> &points);

/// entropy_bits,required_shots,hd_budget,confidence,trials,seed
std::string calibration_to_csv(const std::vector<CalibrationPoint> &points);
nlohmann::json calibration_fit_json(const LinearFit &fit);

/// Median Hellinger distance between `trials` empirical draws and the target.
double median_hellinger(const ProbDist &target, std::uint64_t shots, std::uint64_t trials, std::uint64_t seed);

struct HellingerPoint {
    std::size_t n_qubits = 0;
    std::uint64_t shots = 0;
    double median_distance = 0.0;
};

/// Median Hellinger for uniform targets over every (n, shots) pair.
std::vector<HellingerPoint> hellinger_sweep(const std::vector<std::size_t> &qubit_counts,
                                            const std::vector<std::uint64_t> &shot_counts, std::uint64_t trials,
                                            std::uint64_t seed);
/// n_qubits,shots,median_hellinger,trials,seed
std::string hellinger_sweep_to_csv(const std::vector<HellingerPoint> &points, std::uint64_t trials,
                                   std::uint64_t seed);

}  // namespace dds
