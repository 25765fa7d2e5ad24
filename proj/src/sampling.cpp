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

#include "dds/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dds {

Counts::Counts(std::size_t n_qubits, std::map<std::uint64_t, std::uint64_t> histogram)
    : n_qubits_(n_qubits), histogram_(std::move(histogram)) {
    if (n_qubits_ < 1 || n_qubits_ > 63) {
        throw std::invalid_argument("counts qubit count out of range");
    }
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
    for (auto it = histogram_.begin(); it != histogram_.end();) {
        if (it->first >= dim) {
            throw std::out_of_range("outcome " + std::to_string(it->first) + " out of range for " +
                                    std::to_string(n_qubits_) + " qubits");
        }
        if (it->second == 0) {
            it = histogram_.erase(it);
            continue;
        }
        total_ += it->second;
        ++it;
    }
    if (total_ < 1) {
        throw std::invalid_argument("counts must contain at least one shot");
    }
}

std::uint64_t Counts::count(std::uint64_t outcome) const {
    auto it = histogram_.find(outcome);
    return it == histogram_.end() ? 0 : it->second;
}

ProbDist::ProbDist(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    if (p_.empty()) {
        throw std::invalid_argument("empty distribution");
    }
    double total = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument("distribution has a negative or NaN entry");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution sums to " + std::to_string(total) + ", expected 1");
    }
}

ProbDist ProbDist::from_counts(const Counts &counts) {
    std::vector<double> p(std::size_t{1} << counts.n_qubits(), 0.0);
    const auto total = static_cast<double>(counts.total_shots());
    for (const auto &[outcome, c] : counts.histogram()) {
        p[outcome] = static_cast<double>(c) / total;
    }
    return ProbDist(std::move(p));
}

OutcomeSampler::OutcomeSampler(std::span<const double> probabilities) : cdf_(probabilities.size()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        acc += probabilities[i];
        cdf_[i] = acc;
    }
}

std::uint64_t OutcomeSampler::draw(double u) const {
    // Scale by the accumulated total so rounding in the normalization cannot
    // push u past the last bin.
    const double target = u * cdf_.back();
    // upper_bound never lands on a zero-probability bin: such a bin repeats its
    // predecessor's CDF value.
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    auto idx = static_cast<std::uint64_t>(it - cdf_.begin());
    if (idx >= cdf_.size()) {
        idx = cdf_.size() - 1;
    }
    return idx;
}

Counts sample_counts(const ProbDist &dist, std::size_t n_qubits, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (dist.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("distribution size does not match qubit count");
    }
    const OutcomeSampler sampler(dist.probabilities());
    Rng rng(derive_seed(seed, Stream::measure));
    std::vector<std::uint64_t> dense(dist.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++dense[sampler.draw(rng.uniform())];
    }
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) {
            hist.emplace_hint(hist.end(), i, dense[i]);
        }
    }
    return Counts(n_qubits, std::move(hist));
}

Counts sample_counts(const QuantumState &state, std::uint64_t shots, std::uint64_t seed) {
    return sample_counts(ProbDist(exact_distribution(state)), state.n_qubits(), shots, seed);
}

double entropy(std::span<const double> probabilities) {
    if (probabilities.empty()) {
        throw std::invalid_argument("entropy of an empty distribution");
    }
    double h = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    // -0.0 for a point mass reads badly in logs.
    return h == 0.0 ? 0.0 : h;
}

double entropy(const ProbDist &dist) { return entropy(dist.probabilities()); }

double entropy(const Counts &counts) {
    const auto total = static_cast<double>(counts.total_shots());
    double h = 0.0;
    for (const auto &[outcome, c] : counts.histogram()) {
        const double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h == 0.0 ? 0.0 : h;
}

double hellinger(const ProbDist &p, const ProbDist &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("hellinger: support sizes differ (" + std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()) + ")");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
        sum += d * d;
    }
    return std::min(1.0, std::sqrt(sum / 2.0));
}

double hellinger(const Counts &empirical, const ProbDist &reference) {
    if (reference.size() != (std::size_t{1} << empirical.n_qubits())) {
        throw std::invalid_argument("hellinger: reference size does not match counts width");
    }
    const auto total = static_cast<double>(empirical.total_shots());
    double sum = 0.0;
    auto it = empirical.histogram().begin();
    const auto end = empirical.histogram().end();
    for (std::size_t i = 0; i < reference.size(); ++i) {
        double pi = 0.0;
        if (it != end && it->first == i) {
            pi = static_cast<double>(it->second) / total;
            ++it;
        }
        const double d = std::sqrt(pi) - std::sqrt(reference[i]);
        sum += d * d;
    }
    return std::min(1.0, std::sqrt(sum / 2.0));
}

}  // namespace dds
