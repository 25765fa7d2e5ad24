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

#include "dds/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dds {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct BudgetExhausted {};

class Evaluator {
   public:
    Evaluator(const Objective &objective, std::size_t budget, MinimizeResult &result)
        : objective_(objective), budget_(budget), result_(result) {}

    double operator()(const std::vector<double> &x) {
        if (result_.evaluations >= budget_) {
            throw BudgetExhausted{};
        }
        const double value = objective_(x);
        if (!std::isfinite(value)) {
            throw std::runtime_error("objective returned a non-finite value at evaluation " +
                                     std::to_string(result_.evaluations));
        }
        ++result_.evaluations;
        result_.history.push_back({x, value});
        return value;
    }

   private:
    const Objective &objective_;
    std::size_t budget_;
    MinimizeResult &result_;
};

// a + t·(b − a)
std::vector<double> lerp(const std::vector<double> &a, const std::vector<double> &b, double t) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + t * (b[i] - a[i]);
    }
    return out;
}

}  // namespace

void OptimizerOptions::validate() const {
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (!(convergence_tolerance > 0.0)) {
        throw std::invalid_argument("convergence_tolerance must be > 0");
    }
    if (!(initial_step > 0.0)) {
        throw std::invalid_argument("initial_step must be > 0");
    }
}

MinimizeResult minimize(const Objective &objective, std::vector<double> x0, const OptimizerOptions &options) {
    options.validate();
    if (x0.empty()) {
        throw std::invalid_argument("cannot minimize over zero parameters");
    }
    const std::size_t n = x0.size();
    MinimizeResult result;
    Evaluator eval(objective, options.max_iterations, result);

    std::vector<std::vector<double>> sim;
    std::vector<double> fsim;
    try {
        sim.push_back(x0);
        fsim.push_back(eval(x0));
        for (std::size_t i = 0; i < n; ++i) {
            auto v = x0;
            v[i] += options.initial_step;
            fsim.push_back(eval(v));
            sim.push_back(std::move(v));
        }

        auto sort_simplex = [&] {
            std::vector<std::size_t> order(sim.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fsim[a] < fsim[b]; });
            std::vector<std::vector<double>> s2;
            std::vector<double> f2;
            for (auto i : order) {
                s2.push_back(std::move(sim[i]));
                f2.push_back(fsim[i]);
            }
            sim = std::move(s2);
            fsim = std::move(f2);
        };
        sort_simplex();

        while (true) {
            double radius = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                for (std::size_t i = 0; i < n; ++i) {
                    radius = std::max(radius, std::abs(sim[j][i] - sim[0][i]));
                }
            }
            if (radius <= options.convergence_tolerance) {
                result.converged = true;
                break;
            }

            std::vector<double> centroid(n, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t i = 0; i < n; ++i) {
                    centroid[i] += sim[j][i];
                }
            }
            for (auto &c : centroid) {
                c /= static_cast<double>(n);
            }
            const auto &worst = sim[n];

            auto xr = lerp(centroid, worst, -kReflect);
            const double fr = eval(xr);
            bool shrink = false;
            if (fr < fsim[0]) {
                auto xe = lerp(centroid, worst, -kReflect * kExpand);
                const double fe = eval(xe);
                if (fe < fr) {
                    sim[n] = std::move(xe);
                    fsim[n] = fe;
                } else {
                    sim[n] = std::move(xr);
                    fsim[n] = fr;
                }
            } else if (fr < fsim[n - 1]) {
                sim[n] = std::move(xr);
                fsim[n] = fr;
            } else if (fr < fsim[n]) {
                auto xc = lerp(centroid, worst, -kReflect * kContract);
                const double fc = eval(xc);
                if (fc <= fr) {
                    sim[n] = std::move(xc);
                    fsim[n] = fc;
                } else {
                    shrink = true;
                }
            } else {
                auto xcc = lerp(centroid, worst, kContract);
                const double fcc = eval(xcc);
                if (fcc < fsim[n]) {
                    sim[n] = std::move(xcc);
                    fsim[n] = fcc;
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (std::size_t j = 1; j <= n; ++j) {
                    sim[j] = lerp(sim[0], sim[j], kShrink);
                    fsim[j] = eval(sim[j]);
                }
            }
            sort_simplex();
        }
    } catch (const BudgetExhausted &) {
        // Fall through with whatever was evaluated.
    }

    const auto best = std::min_element(result.history.begin(), result.history.end(),
                                       [](const Evaluation &a, const Evaluation &b) { return a.value < b.value; });
    result.x_best = best->x;
    result.f_best = best->value;
    return result;
}

}  // namespace dds
