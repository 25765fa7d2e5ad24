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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace dds {

struct OptimizerOptions {
    std::size_t max_iterations = 1000;  // objective evaluations
    double initial_step = 0.5;          // radians
    double convergence_tolerance = 1e-4;

    void validate() const;
};

inline constexpr std::string_view kOptimizerName = "nelder-mead";

struct Evaluation {
    std::vector<double> x;
    double value = 0.0;
};

struct MinimizeResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
    std::vector<Evaluation> history;  // every evaluation, in call order
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free Nelder–Mead simplex descent (reflection 1, expansion 2,
/// contraction 0.5, shrink 0.5). The initial simplex is x0 plus
/// `initial_step` along each axis. Stops when every vertex lies within
/// `convergence_tolerance` (max-norm) of the best vertex, or after
/// `max_iterations` evaluations. Each objective call is one iteration and is
/// recorded in `history`. A non-finite objective value aborts with
/// std::runtime_error.
MinimizeResult minimize(const Objective &objective, std::vector<double> x0, const OptimizerOptions &options = {});

}  // namespace dds
