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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dds/report.hpp"

namespace dds {
namespace {

TrainLog make_log(ShotPolicy policy, std::uint64_t seed, std::vector<std::uint64_t> shots, double final_cost,
                  std::optional<double> e_ideal = -10.0) {
    TrainLog log;
    log.policy = std::move(policy);
    log.seed = seed;
    log.e_ideal = e_ideal;
    for (std::size_t i = 0; i < shots.size(); ++i) {
        IterationRecord r;
        r.iteration = i;
        r.shots = shots[i];
        log.records.push_back(r);
        log.s_tot += shots[i];
    }
    log.i_tot = shots.size();
    log.final_evaluation.shots = 1024;
    log.final_evaluation.cost = final_cost;
    return log;
}

TEST(Summarize, ShotsPerIterationIdentity) {
    const auto s = summarize({make_log(ShotPolicy::fixed(), 1, {1024, 1024}, -9.0)});
    EXPECT_DOUBLE_EQ(s.s_avg, 1024.0);
    EXPECT_DOUBLE_EQ(s.s_tot, 2048.0);
    EXPECT_DOUBLE_EQ(s.i_tot, 2.0);
    EXPECT_EQ(s.seed_count, 1u);
}

TEST(Summarize, ArgExamples) {
    const auto exact = summarize({make_log(ShotPolicy::fixed(), 1, {10}, -10.0), make_log(ShotPolicy::fixed(), 2, {10}, -10.0)});
    ASSERT_TRUE(exact.arg.has_value());
    EXPECT_DOUBLE_EQ(*exact.arg, 0.0);
    // ARG 4 and ARG 6.
    const auto two = summarize({make_log(ShotPolicy::fixed(), 1, {10}, -9.6), make_log(ShotPolicy::fixed(), 2, {10}, -9.4)});
    EXPECT_NEAR(*two.arg, 5.0, 1e-12);
    EXPECT_NEAR(two.final_cost, -9.5, 1e-12);
    const auto no_ref = summarize({make_log(ShotPolicy::fixed(), 1, {10}, -1.0, std::nullopt)});
    EXPECT_FALSE(no_ref.arg.has_value());
    const auto over = summarize({make_log(ShotPolicy::fixed(), 1, {10}, -1.0, std::nullopt)}, -2.0);
    EXPECT_NEAR(*over.arg, 50.0, 1e-12);
}

TEST(Summarize, Errors) {
    EXPECT_THROW(summarize({}), std::invalid_argument);
    EXPECT_THROW(summarize({make_log(ShotPolicy::fixed(), 1, {1}, 0), make_log(ShotPolicy::linear(), 1, {1}, 0)}),
                 std::invalid_argument);
}

TEST(SummarizeProperty, PermutationInvariantAndIdentity) {
    std::vector<TrainLog> logs;
    for (std::uint64_t s = 0; s < 6; ++s) {
        std::vector<std::uint64_t> shots;
        for (std::uint64_t i = 0; i < 3 + s * 7; ++i) {
            shots.push_back(1 + (s * 131 + i * 17) % 1000);
        }
        logs.push_back(make_log(ShotPolicy::dds(3.0), s, shots, -7.0 - 0.37 * static_cast<double>(s)));
    }
    const auto base = summarize(logs);
    EXPECT_NEAR(base.s_avg * base.i_tot, base.s_tot, 1e-9 * base.s_tot);
    std::sort(logs.begin(), logs.end(), [](const TrainLog &a, const TrainLog &b) { return a.seed > b.seed; });
    do {
        const auto p = summarize(logs);
        EXPECT_EQ(p.s_avg, base.s_avg);
        EXPECT_EQ(p.s_tot, base.s_tot);
        EXPECT_EQ(p.final_cost, base.final_cost);
        EXPECT_EQ(p.arg, base.arg);
        EXPECT_EQ(p.final_cost_se, base.final_cost_se);
    } while (std::next_permutation(logs.begin(), logs.begin() + 4,
                                   [](const TrainLog &a, const TrainLog &b) { return a.seed < b.seed; }));
}

TEST(Reduction, Examples) {
    EXPECT_EQ(reduction_vs_baseline(1000, 1000), 0.0);
    EXPECT_DOUBLE_EQ(reduction_vs_baseline(500, 1000), 50.0);
    EXPECT_DOUBLE_EQ(reduction_vs_baseline(1500, 1000), -50.0);
    EXPECT_THROW(reduction_vs_baseline(10, 0), std::invalid_argument);
    const auto s = summarize({make_log(ShotPolicy::fixed(), 1, {37, 91, 1024}, -3)});
    EXPECT_EQ(reduction_vs_baseline(s, s), 0.0);
}

TEST(Stats, MeanAndStandardError) {
    EXPECT_DOUBLE_EQ(mean({1, 2, 3, 4}), 2.5);
    EXPECT_DOUBLE_EQ(standard_error({5.0}), 0.0);
    EXPECT_NEAR(standard_error({1, 2, 3, 4}), std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
}

TEST(Compare, SelfComparisonIsZero) {
    std::vector<TrainLog> logs{make_log(ShotPolicy::fixed(), 1, {1024, 1024}, -9)};
    auto other = ShotPolicy::fixed();
    other.name = "fixed_copy";
    logs.push_back(make_log(other, 1, {1024, 1024}, -9));
    const auto rows = compare_logs(logs, "fixed");
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1].reduction_pct, 0.0);
    EXPECT_EQ(rows[1].arg_delta, 0.0);
}

TEST(Compare, HalfTheShotsIsFiftyPercent) {
    std::vector<TrainLog> logs;
    for (std::uint64_t seed : {1u, 2u}) {
        logs.push_back(make_log(ShotPolicy::fixed(), seed, {1024, 1024}, -9));
        logs.push_back(make_log(ShotPolicy::dds(2.0), seed, {512, 512}, -8));
    }
    const auto rows = compare_logs(logs);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].summary.policy, "fixed");
    EXPECT_DOUBLE_EQ(rows[1].reduction_pct, 50.0);
    EXPECT_NEAR(*rows[1].arg_delta, 10.0, 1e-12);
    const auto csv = comparison_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "policy,seeds,s_avg,i_tot,s_tot,final_cost,final_cost_se,arg,arg_se,reduction_pct,arg_delta");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Compare, ReductionIsSeedMatchedThenAveraged) {
    // Seed 1: 50%, seed 2: 0%. The ratio of totals would give 12.5.
    std::vector<TrainLog> logs{make_log(ShotPolicy::fixed(), 1, {1000}, -9), make_log(ShotPolicy::fixed(), 2, {3000}, -9),
                               make_log(ShotPolicy::dds(2.0), 1, {500}, -9), make_log(ShotPolicy::dds(2.0), 2, {3000}, -9)};
    EXPECT_DOUBLE_EQ(compare_logs(logs)[1].reduction_pct, 25.0);
}

TEST(Compare, Errors) {
    EXPECT_THROW(compare_logs({make_log(ShotPolicy::dds(2.0), 1, {1}, -1)}), std::invalid_argument);
    EXPECT_THROW(compare_logs({make_log(ShotPolicy::fixed(), 1, {1}, -1), make_log(ShotPolicy::dds(2.0), 2, {1}, -1)}),
                 std::invalid_argument);
    EXPECT_THROW(compare_logs({make_log(ShotPolicy::fixed(), 1, {1}, -1), make_log(ShotPolicy::fixed(), 1, {1}, -1)}),
                 std::invalid_argument);
    EXPECT_THROW(compare_logs({make_log(ShotPolicy::fixed(), 1, {1}, -1)}, "missing"), std::invalid_argument);
}

TEST(Report, RunSummaryCsv) {
    const auto csv = run_summary_csv({make_log(ShotPolicy::fixed(), 3, {1024, 1024}, -9.5)});
    EXPECT_EQ(csv, "policy,seed,s_avg,i_tot,s_tot,final_cost,arg\nfixed,3,1024,2,2048,-9.5,5\n");
}

}  // namespace
}  // namespace dds
