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
#include <optional>
#include <string>
#include <vector>

#include "dds/training.hpp"

namespace dds {

/// Per-policy means over seeds. s_avg is pooled (mean S_tot / mean I_tot) so
/// that s_tot = s_avg·i_tot holds for the summary row too.
struct PolicySummary {
    std::string policy;
    double s_avg = 0.0;
    double i_tot = 0.0;
    double s_tot = 0.0;
    double final_cost = 0.0;
    double final_cost_se = 0.0;
    std::optional<double> arg;
    std::optional<double> arg_se;
    std::size_t seed_count = 0;
};

/// Throws std::invalid_argument on empty input or mixed policy labels.
/// `e_ideal` overrides the energy stored in the logs.
PolicySummary summarize(const std::vector<TrainLog> &logs, std::optional<double> e_ideal = std::nullopt);

/// 100·(1 − s_tot/baseline.s_tot); negative when the policy used more shots.
double reduction_vs_baseline(const PolicySummary &summary, const PolicySummary &baseline);
double reduction_vs_baseline(double s_tot, double baseline_s_tot);

/// Sample mean and standard error of the mean (0 for a single value).
double mean(const std::vector<double> &values);
double standard_error(const std::vector<double> &values);

struct ComparisonRow {
    PolicySummary summary;
    double reduction_pct = 0.0;  // seed-matched mean against the baseline
    std::optional<double> arg_delta;
};

/// Groups logs by policy label and compares each group to the fixed-policy
/// baseline. Every policy must cover exactly the baseline's seed set. When
/// `baseline` is empty the unique fixed-kind label is used.
std::vector<ComparisonRow> compare_logs(const std::vector<TrainLog> &logs, const std::string &baseline = {});

/// policy,seed,s_avg,i_tot,s_tot,final_cost,arg
std::string run_summary_csv(const std::vector<TrainLog> &logs);
/// policy,seeds,s_avg,i_tot,s_tot,final_cost,final_cost_se,arg,arg_se,reduction_pct,arg_delta
std::string comparison_csv(const std::vector<ComparisonRow> &rows);

}  // namespace dds
