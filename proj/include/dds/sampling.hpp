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
#include <map>
#include <span>
#include <vector>

#include "dds/rng.hpp"
#include "dds/statevector.hpp"

namespace dds {

/// Empirical outcome histogram of one shot batch.
class Counts {
   public:
    Counts(std::size_t n_qubits, std::map<std::uint64_t, std::uint64_t> histogram);

    std::size_t n_qubits() const { return n_qubits_; }
    std::uint64_t total_shots() const { return total_; }
    const std::map<std::uint64_t, std::uint64_t> &histogram() const { return histogram_; }
    std::uint64_t count(std::uint64_t outcome) const;

    bool operator==(const Counts &) const = default;

   private:
    std::size_t n_qubits_;
    std::map<std::uint64_t, std::uint64_t> histogram_;
    std::uint64_t total_ = 0;
};

/// Dense probability vector indexed by outcome.
class ProbDist {
   public:
    /// Throws if any entry is negative or the sum differs from 1 by more
    /// than 1e-9.
    explicit ProbDist(std::vector<double> probabilities);

    /// Normalized histogram over 2^n outcomes; unseen outcomes have
    /// probability 0.
    static ProbDist from_counts(const Counts &counts);

    std::size_t size() const { return p_.size(); }
    std::span<const double> probabilities() const { return p_; }
    double operator[](std::size_t i) const { return p_[i]; }

   private:
    std::vector<double> p_;
};

/// Draws `shots` outcomes from `dist`. The k-th shot consumes the k-th uniform
/// of the stream derive_seed(seed, Stream::measure); the noisy sampler follows
/// the same rule so zero-noise runs are bit-identical.
Counts sample_counts(const ProbDist &dist, std::size_t n_qubits, std::uint64_t shots, std::uint64_t seed);
Counts sample_counts(const QuantumState &state, std::uint64_t shots, std::uint64_t seed);

/// Inverse-CDF sampler over a fixed distribution.
class OutcomeSampler {
   public:
    explicit OutcomeSampler(std::span<const double> probabilities);
    std::uint64_t draw(double u) const;

   private:
    std::vector<double> cdf_;
};

/// Shannon entropy in bits with 0·log 0 = 0.
double entropy(const ProbDist &dist);
double entropy(const Counts &counts);
double entropy(std::span<const double> probabilities);

/// Hellinger distance (1/√2)·‖√p − √q‖₂, in [0, 1].
double hellinger(const ProbDist &p, const ProbDist &q);
/// Empirical counts against a reference distribution, aligned by outcome index.
double hellinger(const Counts &empirical, const ProbDist &reference);

}  // namespace dds
