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

#include "dds/rng.hpp"
#include "dds/sampling.hpp"
#include "dds/statevector.hpp"

namespace dds {
namespace {

ProbDist random_dist(Rng &rng, std::size_t size) {
    std::vector<double> p(size);
    double total = 0.0;
    for (auto &v : p) {
        v = rng.uniform();
        total += v;
    }
    for (auto &v : p) {
        v /= total;
    }
    return ProbDist(p);
}

TEST(Sampling, PointMassState) {
    const auto s = run_circuit(CircuitBuilder(1).x(0).build(), {});
    const auto c = sample_counts(s, 100, 1);
    EXPECT_EQ(c.histogram().size(), 1u);
    EXPECT_EQ(c.count(1), 100u);
}

TEST(Sampling, BellStateSupportAndBand) {
    const auto s = run_circuit(CircuitBuilder(2).h(0).cnot(0, 1).build(), {});
    const auto c = sample_counts(s, 100000, 42);
    EXPECT_EQ(c.count(1), 0u);
    EXPECT_EQ(c.count(2), 0u);
    EXPECT_GE(c.count(0), 48500u);
    EXPECT_LE(c.count(0), 51500u);
    EXPECT_GE(c.count(3), 48500u);
    EXPECT_LE(c.count(3), 51500u);
    EXPECT_EQ(c.total_shots(), 100000u);
}

TEST(Sampling, SingleShot) {
    const auto s = run_circuit(CircuitBuilder(3).h(0).h(1).h(2).build(), {});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = sample_counts(s, 1, seed);
        ASSERT_EQ(c.histogram().size(), 1u);
        EXPECT_EQ(c.histogram().begin()->second, 1u);
    }
}

TEST(Sampling, RejectsZeroShots) {
    EXPECT_THROW(sample_counts(QuantumState(1), 0, 1), std::invalid_argument);
}

TEST(Sampling, DeterministicForSeed) {
    const auto s = run_circuit(CircuitBuilder(4).h(0).h(1).h(2).h(3).build(), {});
    EXPECT_EQ(sample_counts(s, 5000, 9), sample_counts(s, 5000, 9));
    EXPECT_NE(sample_counts(s, 5000, 9), sample_counts(s, 5000, 10));
}

TEST(Sampling, CountsInvariants) {
    EXPECT_THROW(Counts(2, {{4, 1}}), std::out_of_range);
    EXPECT_THROW(Counts(2, {}), std::invalid_argument);
    EXPECT_THROW(Counts(2, {{0, 0}}), std::invalid_argument);
    const Counts c(2, {{0, 3}, {1, 0}, {3, 5}});
    EXPECT_EQ(c.total_shots(), 8u);
    EXPECT_EQ(c.histogram().size(), 2u);
}

TEST(Sampling, ProbDistValidation) {
    EXPECT_THROW(ProbDist({}), std::invalid_argument);
    EXPECT_THROW(ProbDist({0.5, 0.4}), std::invalid_argument);
    EXPECT_THROW(ProbDist({1.5, -0.5}), std::invalid_argument);
    EXPECT_NO_THROW(ProbDist({0.5, 0.5 + 1e-12}));
}

TEST(Entropy, Examples) {
    EXPECT_DOUBLE_EQ(entropy(ProbDist({0.25, 0.25, 0.25, 0.25})), 2.0);
    EXPECT_EQ(entropy(ProbDist({0, 1, 0, 0})), 0.0);
    std::vector<double> ghz(8, 0.0);
    ghz[0] = ghz[7] = 0.5;
    EXPECT_DOUBLE_EQ(entropy(ProbDist(ghz)), 1.0);
    EXPECT_THROW(entropy(std::span<const double>()), std::invalid_argument);
}

TEST(Entropy, CountsAreNormalizedFirst) {
    EXPECT_DOUBLE_EQ(entropy(Counts(2, {{0, 10}, {1, 10}, {2, 10}, {3, 10}})), 2.0);
    EXPECT_EQ(entropy(Counts(3, {{5, 17}})), 0.0);
    // (3/4, 1/4) by hand: 0.811278124459...
    EXPECT_NEAR(entropy(Counts(1, {{0, 3}, {1, 1}})), 0.8112781244591328, 1e-12);
}

TEST(EntropyProperty, BoundsOnRandomDistributions) {
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const std::size_t size = std::size_t{1} << (1 + rng.below(6));
        const auto d = random_dist(rng, size);
        const double h = entropy(d);
        EXPECT_GE(h, 0.0);
        EXPECT_LE(h, std::log2(static_cast<double>(size)) + 1e-12);
    }
}

TEST(Hellinger, Examples) {
    const ProbDist p({0.1, 0.2, 0.3, 0.4});
    EXPECT_EQ(hellinger(p, p), 0.0);
    EXPECT_DOUBLE_EQ(hellinger(ProbDist({1, 0}), ProbDist({0, 1})), 1.0);
    EXPECT_NEAR(hellinger(ProbDist({1, 0}), ProbDist({0.5, 0.5})), std::sqrt(2.0 - std::sqrt(2.0)) / std::sqrt(2.0),
                1e-12);
    EXPECT_NEAR(hellinger(ProbDist({1, 0}), ProbDist({0.5, 0.5})), 0.5411961001461969, 1e-12);
    EXPECT_THROW(hellinger(ProbDist({1, 0}), ProbDist({1, 0, 0, 0})), std::invalid_argument);
}

TEST(Hellinger, CountsAlignBySupportIndex) {
    const Counts c(2, {{3, 4}});
    EXPECT_DOUBLE_EQ(hellinger(c, ProbDist({0, 0, 0, 1})), 0.0);
    EXPECT_DOUBLE_EQ(hellinger(c, ProbDist({1, 0, 0, 0})), 1.0);
    EXPECT_NEAR(hellinger(Counts(1, {{0, 1}, {1, 1}}), ProbDist({1, 0})),
                hellinger(ProbDist({0.5, 0.5}), ProbDist({1, 0})), 1e-15);
}

TEST(HellingerProperty, MetricAxioms) {
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        const std::size_t size = 2 + rng.below(14);
        const auto p = random_dist(rng, size);
        const auto q = random_dist(rng, size);
        const auto r = random_dist(rng, size);
        const double pq = hellinger(p, q);
        EXPECT_GE(pq, 0.0);
        EXPECT_LE(pq, 1.0);
        EXPECT_DOUBLE_EQ(pq, hellinger(q, p));
        EXPECT_LT(hellinger(p, p), 1e-12);
        EXPECT_GT(pq, 0.0);
        EXPECT_LE(hellinger(p, r), pq + hellinger(q, r) + 1e-12);
    }
}

TEST(SamplingProperty, UniformFourQubitHellingerScale) {
    // E[H^2] ~ (M-1)/(8N) gives sqrt(15/800000) = 0.00433 at N = 1e5.
    const ProbDist u(std::vector<double>(16, 1.0 / 16));
    double sum = 0.0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        sum += hellinger(sample_counts(u, 4, 100000, derive_seed(77, Stream::trial, {t})), u);
    }
    const double mean = sum / 200.0;
    EXPECT_GT(mean, 0.00433 * 0.7);
    EXPECT_LT(mean, 0.00433 * 1.3);
}

TEST(Sampling, OutcomeSamplerSkipsZeroBins) {
    const std::vector<double> p{0.0, 0.5, 0.0, 0.5};
    const OutcomeSampler s(p);
    EXPECT_EQ(s.draw(0.0), 1u);
    EXPECT_EQ(s.draw(0.4999), 1u);
    EXPECT_EQ(s.draw(0.5), 3u);
    EXPECT_EQ(s.draw(0.9999999), 3u);
}

}  // namespace
}  // namespace dds
