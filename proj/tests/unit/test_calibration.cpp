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

#include <cmath>

#include "dds/calibration.hpp"

namespace dds {
namespace {

TargetSpec spec(TargetKind kind, std::size_t n) {
    TargetSpec s;
    s.kind = kind;
    s.n_qubits = n;
    return s;
}

CalibrationOptions quick(std::uint64_t trials = 50) {
    CalibrationOptions o;
    o.trials = trials;
    return o;
}

TEST(Targets, EntropyOfEachKind) {
    EXPECT_DOUBLE_EQ(entropy(make_target(spec(TargetKind::point_mass, 3))), 0.0);
    EXPECT_NEAR(entropy(make_target(spec(TargetKind::uniform, 4))), 4.0, 1e-12);
    EXPECT_NEAR(entropy(make_target(spec(TargetKind::ghz, 5))), 1.0, 1e-12);
    auto t = spec(TargetKind::truncated_uniform, 3);
    t.outcomes = 3;
    EXPECT_NEAR(entropy(make_target(t)), std::log2(3.0), 1e-12);
    auto b = spec(TargetKind::biased_coin, 8);
    b.eps = 0.1;
    EXPECT_NEAR(entropy(make_target(b)), -(0.1 * std::log2(0.1) + 0.9 * std::log2(0.9)), 1e-12);
    auto r = spec(TargetKind::random_circuit, 4);
    r.depth = 3;
    r.seed = 7;
    const auto rc = make_target(r);
    EXPECT_EQ(rc.size(), 16u);
    EXPECT_GT(entropy(rc), 0.0);
    EXPECT_LE(entropy(rc), 4.0 + 1e-12);
}

TEST(Targets, InvalidSpecs) {
    auto t = spec(TargetKind::truncated_uniform, 3);
    t.outcomes = 9;
    EXPECT_THROW(make_target(t), std::invalid_argument);
    auto b = spec(TargetKind::biased_coin, 2);
    b.eps = 1.5;
    EXPECT_THROW(make_target(b), std::invalid_argument);
    EXPECT_THROW(parse_target_kind("gaussian"), std::invalid_argument);
}

TEST(Targets, JsonRoundTrip) {
    for (const auto &s : default_calibration_family()) {
        const auto back = target_spec_from_json(target_spec_to_json(s));
        EXPECT_EQ(back.kind, s.kind);
        EXPECT_EQ(back.n_qubits, s.n_qubits);
        EXPECT_EQ(back.outcomes, s.outcomes);
        EXPECT_EQ(back.eps, s.eps);
    }
}

TEST(Targets, DefaultFamilySpansTheRange) {
    const auto fam = make_target_family(default_calibration_family());
    ASSERT_GE(fam.size(), 10u);
    double lo = 1e9;
    double hi = -1.0;
    for (const auto &p : fam) {
        lo = std::min(lo, entropy(p));
        hi = std::max(hi, entropy(p));
    }
    EXPECT_LT(lo, 0.5);
    EXPECT_NEAR(hi, 8.0, 1e-9);
}

TEST(RequiredShots, PointMassNeedsOneShot) {
    EXPECT_EQ(required_shots(make_target(spec(TargetKind::point_mass, 4)), quick(), 1), 1u);
}

TEST(RequiredShots, UniformFourQubits) {
    const auto s = required_shots(make_target(spec(TargetKind::uniform, 4)), CalibrationOptions{}, 1);
    EXPECT_GE(s, 375u);
    EXPECT_LE(s, 1500u);
}

TEST(RequiredShots, HalvingBudgetQuadruplesShots) {
    const auto target = make_target(spec(TargetKind::uniform, 3));
    auto o = quick();
    const double base = static_cast<double>(required_shots(target, o, 2));
    o.hd_budget = 0.025;
    const double tight = static_cast<double>(required_shots(target, o, 2));
    EXPECT_NEAR(tight / base, 4.0, 2.0);
}

TEST(RequiredShots, ResultSitsOnAPassFailBoundary) {
    // success_fraction shares the per-trial seeds, so it independently checks
    // that S passes and S - 1 does not.
    const auto target = make_target(spec(TargetKind::uniform, 3));
    const auto o = quick();
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        const auto s = required_shots(target, o, seed);
        ASSERT_GT(s, 1u);
        EXPECT_GE(success_fraction(target, s, o.hd_budget, o.trials, seed), o.confidence);
        EXPECT_LT(success_fraction(target, s - 1, o.hd_budget, o.trials, seed), o.confidence);
    }
    EXPECT_THROW(required_shots(target, CalibrationOptions{0.0, 0.9, 50}, 5), std::invalid_argument);
}

TEST(RequiredShotsProperty, IncreasesWithUniformWidth) {
    std::uint64_t prev = 0;
    for (std::size_t m = 1; m <= 8; ++m) {
        const auto s = required_shots(make_target(spec(TargetKind::uniform, m)), quick(), 11);
        EXPECT_GT(s, prev) << "m=" << m;
        prev = s;
    }
}

TEST(Calibration, OptionsValidation) {
    EXPECT_THROW((CalibrationOptions{0.05, 0.9, 10}).validate(), std::invalid_argument);
    EXPECT_THROW((CalibrationOptions{0.05, 1.0, 100}).validate(), std::invalid_argument);
    EXPECT_THROW((CalibrationOptions{1.5, 0.9, 100}).validate(), std::invalid_argument);
    EXPECT_NO_THROW((CalibrationOptions{}).validate());
}

TEST(Calibration, SuccessFractionBounds) {
    const auto t = make_target(spec(TargetKind::uniform, 2));
    EXPECT_DOUBLE_EQ(success_fraction(t, 1000000, 0.05, 30, 1), 1.0);
    EXPECT_DOUBLE_EQ(success_fraction(t, 1, 0.05, 30, 1), 0.0);
}

TEST(Calibration, FitLineExact) {
    const auto f = fit_line({0, 1, 2, 3}, {1, 3, 5, 7});
    EXPECT_NEAR(f.slope, 2.0, 1e-12);
    EXPECT_NEAR(f.intercept, 1.0, 1e-12);
    EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
    EXPECT_EQ(f.n_points, 4u);
    EXPECT_THROW(fit_line({1.0}, {2.0}), std::invalid_argument);
    EXPECT_THROW(fit_line({1, 1, 1}, {1, 2, 3}), std::invalid_argument);
}

TEST(Calibration, SweepIsDeterministicAndFormatted) {
    std::vector<ProbDist> fam{make_target(spec(TargetKind::point_mass, 2)), make_target(spec(TargetKind::uniform, 2)),
                              make_target(spec(TargetKind::uniform, 3))};
    const auto a = entropy_shots_sweep(fam, quick(30), 4);
    const auto b = entropy_shots_sweep(fam, quick(30), 4);
    const auto csv = calibration_to_csv(a);
    EXPECT_EQ(csv, calibration_to_csv(b));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "entropy_bits,required_shots,hd_budget,confidence,trials,seed");
    EXPECT_EQ(a[0].required_shots, 1u);
    const auto fit = fit_calibration(a);
    EXPECT_GT(fit.slope, 0.0);
    EXPECT_EQ(calibration_fit_json(fit)["n_points"], 3);
}

TEST(Hellinger, MedianShrinksWithShots) {
    const auto t = make_target(spec(TargetKind::uniform, 4));
    EXPECT_GT(median_hellinger(t, 100, 51, 3), median_hellinger(t, 10000, 51, 3));
    const auto pts = hellinger_sweep({2, 4}, {100, 1000}, 21, 8);
    ASSERT_EQ(pts.size(), 4u);
    const auto csv = hellinger_sweep_to_csv(pts, 21, 8);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n_qubits,shots,median_hellinger,trials,seed");
}

}  // namespace
}  // namespace dds
