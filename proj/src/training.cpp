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

#include "dds/training.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dds/io.hpp"
#include "dds/rng.hpp"

namespace dds {

namespace {

struct Sample {
    double cost = 0.0;
    double entropy = 0.0;
    bool clamped = false;
};

// Shared estimator interface for both problem kinds: one sampling round at a
// given parameter vector.
class Estimator {
   public:
    virtual ~Estimator() = default;
    virtual std::size_t n_parameters() const = 0;
    virtual Sample evaluate(std::span<const double> x, std::uint64_t shots, std::uint64_t seed) const = 0;
};

class QaoaEstimator final : public Estimator {
   public:
    QaoaEstimator(const QaoaProblem &p, const std::optional<NoiseModel> &noise, std::uint64_t batch)
        : circuit_(build_qaoa_circuit(p.instance.graph, p.layers)),
          cuts_(all_cut_values(p.instance.graph)),
          noise_(noise),
          batch_(batch) {}

    std::size_t n_parameters() const override { return circuit_.n_parameters(); }

    Sample evaluate(std::span<const double> x, std::uint64_t shots, std::uint64_t seed) const override {
        Sample s;
        if (noise_) {
            s.clamped = plan_trajectories(batch_, shots).clamped;
            const Counts counts = sample_counts_noisy(circuit_, x, shots, *noise_, seed, batch_);
            s.cost = qaoa_cost_from_counts(counts, cuts_);
            s.entropy = entropy(counts);
        } else {
            const Counts counts = sample_counts(run_circuit(circuit_, x), shots, seed);
            s.cost = qaoa_cost_from_counts(counts, cuts_);
            s.entropy = entropy(counts);
        }
        return s;
    }

   private:
    Circuit circuit_;
    std::vector<double> cuts_;
    std::optional<NoiseModel> noise_;
    std::uint64_t batch_;
};

class HamiltonianEstimator final : public Estimator {
   public:
    HamiltonianEstimator(const HamiltonianProblem &p, const std::optional<NoiseModel> &noise, std::uint64_t batch,
                         EntropySource source)
        : observable_(p.observable),
          ansatz_(build_hw_efficient_circuit(p.observable.n_qubits(), p.layers)),
          groups_(group_terms(p.observable)),
          noise_(noise),
          batch_(batch),
          source_(source) {}

    std::size_t n_parameters() const override { return ansatz_.n_parameters(); }
    std::size_t n_groups() const { return groups_.size(); }

    Sample evaluate(std::span<const double> x, std::uint64_t shots, std::uint64_t seed) const override {
        Sample s;
        if (!noise_) {
            const auto m = group_and_measure(run_circuit(ansatz_, x), observable_, shots, seed, source_);
            s.cost = m.expectation;
            s.entropy = entropy(m.primary_counts);
            return s;
        }
        std::vector<Counts> counts;
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            const Circuit full = Circuit::concat(ansatz_, groups_[g].rotation);
            std::vector<double> params(x.begin(), x.end());
            params.insert(params.end(), groups_[g].rotation_angles.begin(), groups_[g].rotation_angles.end());
            const std::uint64_t n = group_shots(shots, groups_.size(), g);
            s.clamped = s.clamped || plan_trajectories(batch_, n).clamped;
            counts.push_back(sample_counts_noisy(full, params, n, *noise_, derive_seed(seed, Stream::group, {g}), batch_));
        }
        s.cost = combine_group_estimates(observable_, groups_, counts);
        s.entropy = entropy(select_primary_counts(groups_, counts, source_));
        return s;
    }

   private:
    Observable observable_;
    Circuit ansatz_;
    std::vector<MeasurementGroup> groups_;
    std::optional<NoiseModel> noise_;
    std::uint64_t batch_;
    EntropySource source_;
};

nlohmann::json observable_to_json(const Observable &obs) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : obs.terms()) {
        terms.push_back({t.coefficient, t.paulis});
    }
    return {{"terms", terms}, {"offset", obs.constant_offset()}};
}

nlohmann::json optional_number(const std::optional<double> &v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

}  // namespace

std::size_t problem_qubits(const Problem &problem) {
    return std::visit(
        [](const auto &p) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, QaoaProblem>) {
                return p.instance.graph.n_nodes();
            } else {
                return p.observable.n_qubits();
            }
        },
        problem);
}

std::optional<double> ideal_energy(const Problem &problem) {
    if (const auto *q = std::get_if<QaoaProblem>(&problem)) {
        return -brute_force_max_cut(q->instance.graph).best_value;
    }
    return std::get<HamiltonianProblem>(problem).reference_energy;
}

nlohmann::json problem_to_json(const Problem &problem) {
    if (const auto *q = std::get_if<QaoaProblem>(&problem)) {
        return {{"type", "qaoa"},
                {"layers", q->layers},
                {"instance_file", q->instance_file},
                {"instance", graph_instance_to_json(q->instance)}};
    }
    const auto &h = std::get<HamiltonianProblem>(problem);
    return {{"type", "hamiltonian"},
            {"layers", h.layers},
            {"ansatz", "hardware_efficient"},
            {"source_file", h.source_file},
            {"reference_energy", optional_number(h.reference_energy)},
            {"observable", observable_to_json(h.observable)}};
}

double arg_metric(double e_ideal, double e_real) {
    if (e_ideal == 0.0) {
        throw std::invalid_argument("ARG is undefined for a zero ideal energy");
    }
    return 100.0 * std::abs((e_ideal - e_real) / e_ideal);
}

std::optional<double> TrainLog::arg() const {
    if (!e_ideal || *e_ideal == 0.0) {
        return std::nullopt;
    }
    return arg_metric(*e_ideal, final_evaluation.cost);
}

TrainLog train(const Problem &problem, const ShotPolicy &policy_in, const std::optional<NoiseModel> &noise,
               const TrainOptions &options, std::uint64_t seed) {
    options.optimizer.validate();
    if (options.final_shots < 1) {
        throw std::invalid_argument("final_shots must be >= 1");
    }
    if (options.trajectory_batch < 1) {
        throw std::invalid_argument("trajectory_batch must be >= 1");
    }
    ShotPolicy policy = policy_in;
    const std::size_t n_qubits = problem_qubits(problem);
    if (policy.is_entropy_driven() && !policy.k) {
        policy.k = default_k(n_qubits);
    }
    policy.validate();

    std::unique_ptr<Estimator> estimator;
    std::uint64_t min_shots = 1;
    if (const auto *q = std::get_if<QaoaProblem>(&problem)) {
        estimator = std::make_unique<QaoaEstimator>(*q, noise, options.trajectory_batch);
    } else {
        auto h = std::make_unique<HamiltonianEstimator>(std::get<HamiltonianProblem>(problem), noise,
                                                        options.trajectory_batch, options.entropy_source);
        min_shots = h->n_groups();
        estimator = std::move(h);
    }

    TrainLog log;
    log.seed = seed;
    log.policy = policy;
    log.problem = problem_to_json(problem);
    log.noise = noise;
    log.noise_label = noise ? (noise->label.empty() ? std::string("custom") : noise->label) : "none";
    log.optimizer_options = options.optimizer;
    log.trajectory_batch = options.trajectory_batch;
    log.n_qubits = n_qubits;
    log.n_parameters = estimator->n_parameters();
    log.e_ideal = ideal_energy(problem);

    if (options.initial_parameters) {
        if (options.initial_parameters->size() != log.n_parameters) {
            throw std::invalid_argument("initial parameters have length " +
                                        std::to_string(options.initial_parameters->size()) + ", expected " +
                                        std::to_string(log.n_parameters));
        }
        log.initial_parameters = *options.initial_parameters;
    } else {
        Rng rng(derive_seed(seed, Stream::init));
        log.initial_parameters.resize(log.n_parameters);
        for (auto &v : log.initial_parameters) {
            v = rng.uniform(-std::numbers::pi, std::numbers::pi);
        }
    }

    double prev_entropy = policy.initial_entropy;
    auto objective = [&](std::span<const double> x) {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t i = log.records.size();
        // Groups of a Hamiltonian each need at least one shot.
        const std::uint64_t shots = std::max(next_shots(policy, i, prev_entropy), min_shots);
        if (shots == 0) {
            throw std::runtime_error("shot policy produced zero shots at iteration " + std::to_string(i));
        }
        const Sample s = estimator->evaluate(x, shots, derive_seed(seed, Stream::iteration, {i}));
        if (!std::isfinite(s.cost)) {
            throw std::runtime_error("non-finite cost at iteration " + std::to_string(i));
        }
        prev_entropy = s.entropy;
        log.clamped_trajectory_iterations += s.clamped ? 1 : 0;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        log.records.push_back({i, shots, s.entropy, s.cost, std::vector<double>(x.begin(), x.end()), elapsed.count()});
        log.s_tot += shots;
        return s.cost;
    };

    const MinimizeResult result = minimize(objective, log.initial_parameters, options.optimizer);
    log.converged = result.converged;
    log.i_tot = log.records.size();

    const Sample final = estimator->evaluate(result.x_best, options.final_shots, derive_seed(seed, Stream::final_eval));
    log.final_evaluation = {options.final_shots, final.cost, final.entropy, result.x_best};
    check_log_invariants(log);
    return log;
}

void check_log_invariants(const TrainLog &log) {
    if (log.records.size() != log.i_tot) {
        throw std::logic_error("record count differs from I_tot");
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < log.records.size(); ++i) {
        if (log.records[i].iteration != i) {
            throw std::logic_error("iteration indices are not consecutive");
        }
        if (log.records[i].shots < 1) {
            throw std::logic_error("iteration with zero shots");
        }
        total += log.records[i].shots;
    }
    if (total != log.s_tot) {
        throw std::logic_error("S_tot differs from the per-iteration shot sum");
    }
}

nlohmann::json train_log_to_json(const TrainLog &log) {
    nlohmann::json iterations = nlohmann::json::array();
    for (const auto &r : log.records) {
        iterations.push_back(
            {{"iteration", r.iteration}, {"shots", r.shots}, {"entropy", r.entropy_bits}, {"cost", r.cost}, {"parameters", r.parameters}});
    }
    nlohmann::json noise;
    if (log.noise) {
        noise = {{"label", log.noise_label}, {"p1", log.noise->p1}, {"p2", log.noise->p2}};
    }
    const auto arg = log.arg();
    return {
        {"format", "dds-trainlog/1"},
        {"seed", log.seed},
        {"policy", policy_to_json(log.policy)},
        {"problem", log.problem},
        {"noise", noise},
        {"optimizer",
         {{"name", log.optimizer},
          {"max_iterations", log.optimizer_options.max_iterations},
          {"initial_step", log.optimizer_options.initial_step},
          {"convergence_tolerance", log.optimizer_options.convergence_tolerance},
          {"converged", log.converged}}},
        {"trajectory_batch", log.trajectory_batch},
        {"clamped_trajectory_iterations", log.clamped_trajectory_iterations},
        {"n_qubits", log.n_qubits},
        {"n_parameters", log.n_parameters},
        {"initial_parameters", log.initial_parameters},
        {"iterations", iterations},
        {"final_evaluation",
         {{"shots", log.final_evaluation.shots},
          {"cost", log.final_evaluation.cost},
          {"entropy", log.final_evaluation.entropy_bits},
          {"parameters", log.final_evaluation.parameters}}},
        {"e_ideal", optional_number(log.e_ideal)},
        {"arg", optional_number(arg)},
        {"s_tot", log.s_tot},
        {"i_tot", log.i_tot},
        {"s_avg", log.s_avg()},
    };
}

TrainLog train_log_from_json(const nlohmann::json &j) {
    if (j.value("format", std::string()) != "dds-trainlog/1") {
        throw std::invalid_argument("not a training log (missing format tag dds-trainlog/1)");
    }
    TrainLog log;
    log.seed = j.at("seed").get<std::uint64_t>();
    nlohmann::json policy = j.at("policy");
    log.policy = policy_from_json(policy);
    log.problem = j.at("problem");
    if (!j.at("noise").is_null()) {
        const auto &n = j.at("noise");
        log.noise = NoiseModel(n.at("p1").get<double>(), n.at("p2").get<double>(), n.at("label").get<std::string>());
        log.noise_label = log.noise->label;
    }
    const auto &opt = j.at("optimizer");
    log.optimizer = opt.at("name").get<std::string>();
    log.optimizer_options.max_iterations = opt.at("max_iterations").get<std::size_t>();
    log.optimizer_options.initial_step = opt.at("initial_step").get<double>();
    log.optimizer_options.convergence_tolerance = opt.at("convergence_tolerance").get<double>();
    log.converged = opt.at("converged").get<bool>();
    log.trajectory_batch = j.at("trajectory_batch").get<std::uint64_t>();
    log.clamped_trajectory_iterations = j.at("clamped_trajectory_iterations").get<std::uint64_t>();
    log.n_qubits = j.at("n_qubits").get<std::size_t>();
    log.n_parameters = j.at("n_parameters").get<std::size_t>();
    log.initial_parameters = j.at("initial_parameters").get<std::vector<double>>();
    for (const auto &r : j.at("iterations")) {
        log.records.push_back({r.at("iteration").get<std::uint64_t>(), r.at("shots").get<std::uint64_t>(),
                               r.at("entropy").get<double>(), r.at("cost").get<double>(),
                               r.at("parameters").get<std::vector<double>>(), 0.0});
    }
    const auto &f = j.at("final_evaluation");
    log.final_evaluation = {f.at("shots").get<std::uint64_t>(), f.at("cost").get<double>(),
                            f.at("entropy").get<double>(), f.at("parameters").get<std::vector<double>>()};
    if (!j.at("e_ideal").is_null()) {
        log.e_ideal = j.at("e_ideal").get<double>();
    }
    log.s_tot = j.at("s_tot").get<std::uint64_t>();
    log.i_tot = j.at("i_tot").get<std::uint64_t>();
    check_log_invariants(log);
    return log;
}

nlohmann::json train_log_timing_json(const TrainLog &log) {
    std::vector<double> times;
    double total = 0.0;
    for (const auto &r : log.records) {
        times.push_back(r.wall_time_s);
        total += r.wall_time_s;
    }
    return {{"policy", log.policy.label()}, {"seed", log.seed}, {"iteration_wall_time_s", times}, {"total_wall_time_s", total}};
}

std::string train_log_to_csv(const TrainLog &log) {
    std::string out = "iteration,shots,entropy,cost\n";
    for (const auto &r : log.records) {
        out += csv_row({std::to_string(r.iteration), std::to_string(r.shots), format_double(r.entropy_bits),
                        format_double(r.cost)});
    }
    return out;
}

}  // namespace dds
