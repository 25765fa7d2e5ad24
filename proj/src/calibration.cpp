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

#include "dds/calibration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dds/ansatz.hpp"
#include "dds/io.hpp"
#include "dds/rng.hpp"
#include "dds/statevector.hpp"

namespace dds {

namespace {

constexpr std::size_t kMaxTargetQubits = 16;

std::size_t qubits_of(const ProbDist &dist) {
    if (dist.size() < 2 || !std::has_single_bit(dist.size())) {
        throw std::invalid_argument("target distribution size must be a power of two >= 2");
    }
    return static_cast<std::size_t>(std::countr_zero(dist.size()));
}

std::uint64_t required_successes(double confidence, std::uint64_t trials) {
    return static_cast<std::uint64_t>(std::ceil(confidence * static_cast<double>(trials) - 1e-9));
}

}  // namespace

std::string_view target_kind_name(TargetKind kind) {
    switch (kind) {
        case TargetKind::point_mass: return "point_mass";
        case TargetKind::uniform: return "uniform";
        case TargetKind::ghz: return "ghz";
        case TargetKind::truncated_uniform: return "truncated_uniform";
        case TargetKind::random_circuit: return "random_circuit";
        case TargetKind::biased_coin: return "biased_coin";
    }
    throw std::logic_error("unknown target kind");
}

TargetKind parse_target_kind(std::string_view name) {
    for (auto k : {TargetKind::point_mass, TargetKind::uniform, TargetKind::ghz, TargetKind::truncated_uniform,
                   TargetKind::random_circuit, TargetKind::biased_coin}) {
        if (target_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown target kind '" + std::string(name) +
                                "' (expected point_mass, uniform, ghz, truncated_uniform, random_circuit or biased_coin)");
}

ProbDist make_target(const TargetSpec &spec) {
    const std::size_t n = spec.n_qubits;
    if (n < 1 || n > kMaxTargetQubits) {
        throw std::invalid_argument("target n_qubits must be in [1, 16], got " + std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> p(dim, 0.0);
    switch (spec.kind) {
        case TargetKind::point_mass:
            p[0] = 1.0;
            break;
        case TargetKind::uniform:
            std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(dim));
            break;
        case TargetKind::ghz:
            if (n < 2) {
                throw std::invalid_argument("ghz target needs at least 2 qubits");
            }
            p[0] = 0.5;
            p[dim - 1] = 0.5;
            break;
        case TargetKind::truncated_uniform:
            if (spec.outcomes < 1 || spec.outcomes > dim) {
                throw std::invalid_argument("truncated_uniform needs 1 <= outcomes <= 2^n, got " +
                                            std::to_string(spec.outcomes));
            }
            std::fill(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(spec.outcomes),
                      1.0 / static_cast<double>(spec.outcomes));
            break;
        case TargetKind::biased_coin:
            if (!(spec.eps >= 0.0 && spec.eps <= 1.0)) {
                throw std::invalid_argument("biased_coin eps must be in [0, 1]");
            }
            p[0] = 1.0 - spec.eps;
            p[1] = spec.eps;
            break;
        case TargetKind::random_circuit: {
            if (spec.depth < 1) {
                throw std::invalid_argument("random_circuit depth must be >= 1");
            }
            const Circuit c = build_hw_efficient_circuit(n, spec.depth);
            Rng rng(derive_seed(spec.seed, Stream::target, {n, spec.depth}));
            std::vector<double> params(c.n_parameters());
            for (auto &v : params) {
                v = rng.uniform(-std::numbers::pi, std::numbers::pi);
            }
            p = exact_distribution(run_circuit(c, params));
            double total = 0.0;
            for (double v : p) {
                total += v;
            }
            for (auto &v : p) {
                v /= total;
            }
            break;
        }
    }
    return ProbDist(std::move(p));
}

std::vector<ProbDist> make_target_family(const std::vector<TargetSpec> &specs) {
    std::vector<ProbDist> out;
    out.reserve(specs.size());
    for (const auto &s : specs) {
        out.push_back(make_target(s));
    }
    return out;
}

TargetSpec target_spec_from_json(const nlohmann::json &j) {
    TargetSpec s;
    s.kind = parse_target_kind(j.at("kind").get<std::string>());
    s.n_qubits = j.at("n_qubits").get<std::size_t>();
    s.outcomes = j.value("outcomes", std::uint64_t{0});
    s.depth = j.value("depth", std::size_t{1});
    s.seed = j.value("seed", std::uint64_t{0});
    s.eps = j.value("eps", 0.0);
    return s;
}

nlohmann::json target_spec_to_json(const TargetSpec &spec) {
    nlohmann::json j = {{"kind", target_kind_name(spec.kind)}, {"n_qubits", spec.n_qubits}};
    switch (spec.kind) {
        case TargetKind::truncated_uniform: j["outcomes"] = spec.outcomes; break;
        case TargetKind::random_circuit:
            j["depth"] = spec.depth;
            j["seed"] = spec.seed;
            break;
        case TargetKind::biased_coin: j["eps"] = spec.eps; break;
        default: break;
    }
    return j;
}

std::vector<TargetSpec> default_calibration_family() {
    std::vector<TargetSpec> out;
    for (double eps : {0.02, 0.1}) {
        TargetSpec s;
        s.kind = TargetKind::biased_coin;
        s.n_qubits = 8;
        s.eps = eps;
        out.push_back(s);
    }
    for (std::uint64_t j : {2, 3, 4, 6, 8, 16, 32, 64, 128, 256}) {
        TargetSpec s;
        s.kind = TargetKind::truncated_uniform;
        s.n_qubits = 8;
        s.outcomes = j;
        out.push_back(s);
    }
    return out;
}

void CalibrationOptions::validate() const {
    if (!(hd_budget > 0.0 && hd_budget < 1.0)) {
        throw std::invalid_argument("hd_budget must be in (0, 1)");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("confidence must be in (0, 1)");
    }
    if (trials < 30) {
        throw std::invalid_argument("trials must be >= 30");
    }
}

double success_fraction(const ProbDist &target, std::uint64_t shots, double hd_budget, std::uint64_t trials,
                        std::uint64_t seed) {
    const std::size_t n = qubits_of(target);
    std::uint64_t ok = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Counts c = sample_counts(target, n, shots, derive_seed(seed, Stream::trial, {shots, t}));
        ok += hellinger(c, target) <= hd_budget ? 1 : 0;
    }
    return static_cast<double>(ok) / static_cast<double>(trials);
}

std::uint64_t required_shots(const ProbDist &target, const CalibrationOptions &options, std::uint64_t seed) {
    options.validate();
    const std::size_t n = qubits_of(target);
    const std::uint64_t need = required_successes(options.confidence, options.trials);
    auto passes = [&](std::uint64_t shots) {
        std::uint64_t ok = 0;
        for (std::uint64_t t = 0; t < options.trials; ++t) {
            const Counts c = sample_counts(target, n, shots, derive_seed(seed, Stream::trial, {shots, t}));
            ok += hellinger(c, target) <= options.hd_budget ? 1 : 0;
            if (ok >= need) {
                return true;
            }
            if (ok + (options.trials - t - 1) < need) {
                return false;
            }
        }
        return ok >= need;
    };
    if (passes(1)) {
        return 1;
    }
    std::uint64_t lo = 1;
    std::uint64_t hi = 2;
    while (!passes(hi)) {
        if (hi >= kMaxCalibrationShots) {
            throw std::runtime_error("Hellinger budget " + format_double(options.hd_budget) +
                                     " unreachable within 10^7 shots");
        }
        lo = hi;
        hi = std::min(hi * 2, kMaxCalibrationShots);
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (passes(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::vector<CalibrationPoint> entropy_shots_sweep(const std::vector<ProbDist> &family,
                                                  const CalibrationOptions &options, std::uint64_t seed) {
    if (family.empty()) {
        throw std::invalid_argument("calibration family is empty");
    }
    options.validate();
    std::vector<CalibrationPoint> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        CalibrationPoint p;
        p.entropy_bits = entropy(family[i]);
        p.required_shots = required_shots(family[i], options, derive_seed(seed, Stream::target, {i}));
        p.target_distance = options.hd_budget;
        p.confidence = options.confidence;
        p.trials = options.trials;
        p.seed = seed;
        out.push_back(p);
    }
    return out;
}

LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("linear fit needs at least two paired points");
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("linear fit needs at least two distinct x values");
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += r * r;
    }
    f.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    f.n_points = x.size();
    return f;
}

LinearFit fit_calibration(const std::vector<CalibrationPoint> &points) {
    std::vector<double> x;
    std::vector<double> y;
    for (const auto &p : points) {
        x.push_back(p.entropy_bits);
        y.push_back(std::log2(static_cast<double>(p.required_shots)));
    }
    return fit_line(x, y);
}

std::string calibration_to_csv(const std::vector<CalibrationPoint> &points) {
    std::string out = "entropy_bits,required_shots,hd_budget,confidence,trials,seed\n";
    for (const auto &p : points) {
        out += csv_row({format_double(p.entropy_bits), std::to_string(p.required_shots),
                        format_double(p.target_distance), format_double(p.confidence), std::to_string(p.trials),
                        std::to_string(p.seed)});
    }
    return out;
}

nlohmann::json calibration_fit_json(const LinearFit &fit) {
    return {{"x", "entropy_bits"},
            {"y", "log2_required_shots"},
            {"slope", fit.slope},
            {"intercept", fit.intercept},
            {"r_squared", fit.r_squared},
            {"n_points", fit.n_points}};
}

double median_hellinger(const ProbDist &target, std::uint64_t shots, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1 || shots < 1) {
        throw std::invalid_argument("median_hellinger needs trials >= 1 and shots >= 1");
    }
    const std::size_t n = qubits_of(target);
    std::vector<double> d;
    d.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        d.push_back(hellinger(sample_counts(target, n, shots, derive_seed(seed, Stream::trial, {shots, t})), target));
    }
    std::sort(d.begin(), d.end());
    const std::size_t m = d.size() / 2;
    return d.size() % 2 ? d[m] : 0.5 * (d[m - 1] + d[m]);
}

std::vector<HellingerPoint> hellinger_sweep(const std::vector<std::size_t> &qubit_counts,
                                            const std::vector<std::uint64_t> &shot_counts, std::uint64_t trials,
                                            std::uint64_t seed) {
    std::vector<HellingerPoint> out;
    for (std::size_t n : qubit_counts) {
        TargetSpec spec;
        spec.kind = TargetKind::uniform;
        spec.n_qubits = n;
        const ProbDist target = make_target(spec);
        for (std::uint64_t s : shot_counts) {
            out.push_back({n, s, median_hellinger(target, s, trials, derive_seed(seed, Stream::target, {n}))});
        }
    }
    return out;
}

std::string hellinger_sweep_to_csv(const std::vector<HellingerPoint> &points, std::uint64_t trials,
                                   std::uint64_t seed) {
    std::string out = "n_qubits,shots,median_hellinger,trials,seed\n";
    for (const auto &p : points) {
        out += csv_row({std::to_string(p.n_qubits), std::to_string(p.shots), format_double(p.median_distance),
                        std::to_string(trials), std::to_string(seed)});
    }
    return out;
}

}  // namespace dds
