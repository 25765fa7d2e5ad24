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

#include "dds/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "dds/io.hpp"

namespace dds {

namespace {

std::string optional_field(const std::optional<double> &v) { return v ? format_double(*v) : std::string(); }

}  // namespace

double mean(const std::vector<double> &values) {
    if (values.empty()) {
        throw std::invalid_argument("mean of an empty set");
    }
    // Sorted summation keeps the result independent of input order.
    std::vector<double> v = values;
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

double standard_error(const std::vector<double> &values) {
    if (values.size() < 2) {
        return 0.0;
    }
    const double m = mean(values);
    std::vector<double> sq;
    for (double x : values) {
        sq.push_back((x - m) * (x - m));
    }
    const auto n = static_cast<double>(values.size());
    return std::sqrt(mean(sq) * n / (n - 1.0) / n);
}

PolicySummary summarize(const std::vector<TrainLog> &logs, std::optional<double> e_ideal) {
    if (logs.empty()) {
        throw std::invalid_argument("summarize needs at least one log");
    }
    PolicySummary s;
    s.policy = logs.front().policy.label();
    std::vector<double> s_tot;
    std::vector<double> i_tot;
    std::vector<double> cost;
    std::vector<double> arg;
    bool have_arg = true;
    for (const auto &log : logs) {
        if (log.policy.label() != s.policy) {
            throw std::invalid_argument("summarize got mixed policies '" + s.policy + "' and '" + log.policy.label() +
                                        "'");
        }
        s_tot.push_back(static_cast<double>(log.s_tot));
        i_tot.push_back(static_cast<double>(log.i_tot));
        cost.push_back(log.final_evaluation.cost);
        const auto ideal = e_ideal ? e_ideal : log.e_ideal;
        if (ideal && *ideal != 0.0) {
            arg.push_back(arg_metric(*ideal, log.final_evaluation.cost));
        } else {
            have_arg = false;
        }
    }
    s.s_tot = mean(s_tot);
    s.i_tot = mean(i_tot);
    s.s_avg = s.i_tot == 0.0 ? 0.0 : s.s_tot / s.i_tot;
    s.final_cost = mean(cost);
    s.final_cost_se = standard_error(cost);
    if (have_arg) {
        s.arg = mean(arg);
        s.arg_se = standard_error(arg);
    }
    s.seed_count = logs.size();
    return s;
}

double reduction_vs_baseline(double s_tot, double baseline_s_tot) {
    if (!(baseline_s_tot > 0.0)) {
        throw std::invalid_argument("baseline S_tot must be > 0");
    }
    return 100.0 * (1.0 - s_tot / baseline_s_tot);
}

double reduction_vs_baseline(const PolicySummary &summary, const PolicySummary &baseline) {
    return reduction_vs_baseline(summary.s_tot, baseline.s_tot);
}

std::vector<ComparisonRow> compare_logs(const std::vector<TrainLog> &logs, const std::string &baseline_label) {
    if (logs.empty()) {
        throw std::invalid_argument("compare needs at least one log");
    }
    // Policies keep first-appearance order; seeds are keyed for matching.
    std::vector<std::string> order;
    std::map<std::string, std::map<std::uint64_t, const TrainLog *>> by_policy;
    std::set<std::string> fixed_labels;
    for (const auto &log : logs) {
        const std::string label = log.policy.label();
        if (!by_policy.count(label)) {
            order.push_back(label);
        }
        auto &seeds = by_policy[label];
        if (!seeds.emplace(log.seed, &log).second) {
            throw std::invalid_argument("duplicate log for policy '" + label + "' seed " + std::to_string(log.seed));
        }
        if (log.policy.kind == PolicyKind::fixed) {
            fixed_labels.insert(label);
        }
    }
    std::string base = baseline_label;
    if (base.empty()) {
        if (fixed_labels.empty()) {
            throw std::invalid_argument("no fixed-policy baseline among the logs");
        }
        if (fixed_labels.size() > 1) {
            throw std::invalid_argument("several fixed-policy labels; choose a baseline explicitly");
        }
        base = *fixed_labels.begin();
    } else if (!by_policy.count(base)) {
        throw std::invalid_argument("baseline policy '" + base + "' not found among the logs");
    }
    const auto &base_logs = by_policy.at(base);

    auto collect = [](const std::map<std::uint64_t, const TrainLog *> &m) {
        std::vector<TrainLog> v;
        for (const auto &[seed, log] : m) {
            v.push_back(*log);
        }
        return v;
    };
    const PolicySummary base_summary = summarize(collect(base_logs));

    std::vector<ComparisonRow> rows;
    for (const auto &label : order) {
        const auto &logs_for = by_policy.at(label);
        if (logs_for.size() != base_logs.size() ||
            !std::equal(logs_for.begin(), logs_for.end(), base_logs.begin(),
                        [](const auto &a, const auto &b) { return a.first == b.first; })) {
            throw std::invalid_argument("policy '" + label + "' seeds do not match the baseline '" + base +
                                        "'; compare needs seed-matched sets");
        }
        ComparisonRow row;
        row.summary = summarize(collect(logs_for));
        std::vector<double> red;
        for (const auto &[seed, log] : logs_for) {
            red.push_back(reduction_vs_baseline(static_cast<double>(log->s_tot),
                                                static_cast<double>(base_logs.at(seed)->s_tot)));
        }
        row.reduction_pct = mean(red);
        if (row.summary.arg && base_summary.arg) {
            row.arg_delta = *row.summary.arg - *base_summary.arg;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string run_summary_csv(const std::vector<TrainLog> &logs) {
    std::string out = "policy,seed,s_avg,i_tot,s_tot,final_cost,arg\n";
    for (const auto &log : logs) {
        out += csv_row({log.policy.label(), std::to_string(log.seed), format_double(log.s_avg()),
                        std::to_string(log.i_tot), std::to_string(log.s_tot), format_double(log.final_evaluation.cost),
                        optional_field(log.arg())});
    }
    return out;
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows) {
    std::string out = "policy,seeds,s_avg,i_tot,s_tot,final_cost,final_cost_se,arg,arg_se,reduction_pct,arg_delta\n";
    for (const auto &r : rows) {
        const auto &s = r.summary;
        out += csv_row({s.policy, std::to_string(s.seed_count), format_double(s.s_avg), format_double(s.i_tot),
                        format_double(s.s_tot), format_double(s.final_cost), format_double(s.final_cost_se),
                        optional_field(s.arg), optional_field(s.arg_se), format_double(r.reduction_pct),
                        optional_field(r.arg_delta)});
    }
    return out;
}

}  // namespace dds
