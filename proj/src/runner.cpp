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

#include "dds/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <mutex>
#include <thread>

#include "dds/io.hpp"
#include "dds/rng.hpp"

namespace dds {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_meta(const fs::path &out, const std::string &command, std::size_t jobs, double wall, json extra) {
    extra["command"] = command;
    extra["generated_at"] = utc_timestamp();
    extra["jobs"] = jobs;
    extra["wall_time_s"] = wall;
    write_file_atomic(out / "run_meta.json", extra.dump(2) + "\n");
}

std::string log_stem(const TrainLog &log) { return sanitize_label(log.policy.label()) + "_seed" + std::to_string(log.seed); }

std::string optional_field(const std::optional<double> &v) { return v ? format_double(*v) : std::string(); }

}  // namespace

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)> &fn) {
    if (jobs < 1) {
        throw std::invalid_argument("jobs must be >= 1");
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
                failed.store(true);
            }
        }
    };
    const std::size_t threads = std::min(jobs, n);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::string sanitize_label(const std::string &label) {
    std::string out = label;
    for (auto &c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                        c == '_' || c == '.';
        if (!ok) {
            c = '_';
        }
    }
    return out.empty() ? "policy" : out;
}

std::vector<TrainLog> run_train(const RunConfig &config) {
    validate_for_training(config);
    const Stopwatch clock;
    const std::size_t n_seeds = config.seeds.size();
    std::vector<TrainLog> logs(config.policies.size() * n_seeds);
    const fs::path logdir = config.out / "logs";
    parallel_for(logs.size(), config.jobs, [&](std::size_t i) {
        const auto &policy = config.policies[i / n_seeds];
        const std::uint64_t seed = config.seeds[i % n_seeds];
        TrainLog log = train(*config.problem, policy, config.noise, config.train, seed);
        write_file_atomic(logdir / (log_stem(log) + ".json"), train_log_to_json(log).dump(2) + "\n");
        write_file_atomic(logdir / (log_stem(log) + ".csv"), train_log_to_csv(log));
        logs[i] = std::move(log);
    });

    write_file_atomic(config.out / "summary.csv", run_summary_csv(logs));
    std::vector<ComparisonRow> rows;
    bool has_baseline = false;
    for (const auto &p : config.policies) {
        has_baseline = has_baseline || p.kind == PolicyKind::fixed;
    }
    std::string policy_csv = "policy,seeds,s_avg,i_tot,s_tot,final_cost,final_cost_se,arg,arg_se\n";
    for (std::size_t p = 0; p < config.policies.size(); ++p) {
        std::vector<TrainLog> group(logs.begin() + static_cast<std::ptrdiff_t>(p * n_seeds),
                                    logs.begin() + static_cast<std::ptrdiff_t>((p + 1) * n_seeds));
        const auto s = summarize(group);
        policy_csv += csv_row({s.policy, std::to_string(s.seed_count), format_double(s.s_avg), format_double(s.i_tot),
                               format_double(s.s_tot), format_double(s.final_cost), format_double(s.final_cost_se),
                               optional_field(s.arg), optional_field(s.arg_se)});
    }
    write_file_atomic(config.out / "policy_summary.csv", policy_csv);
    if (has_baseline) {
        std::size_t fixed_count = 0;
        for (const auto &p : config.policies) {
            fixed_count += p.kind == PolicyKind::fixed ? 1 : 0;
        }
        std::string base;
        if (fixed_count > 1) {
            for (const auto &p : config.policies) {
                if (p.kind == PolicyKind::fixed) {
                    base = p.label();
                    break;
                }
            }
        }
        write_file_atomic(config.out / "comparison.csv", comparison_csv(compare_logs(logs, base)));
    }

    json timing = json::array();
    for (const auto &log : logs) {
        timing.push_back(train_log_timing_json(log));
    }
    write_meta(config.out, "train", config.jobs, clock.seconds(), {{"runs", timing}});
    return logs;
}

std::vector<CalibrationPoint> run_calibrate(const RunConfig &config) {
    const auto &cal = config.calibration;
    if (cal.family.empty()) {
        throw ConfigError("config field 'calibration.family': must not be empty");
    }
    if (config.seeds.size() > 1) {
        throw ConfigError("config field 'seeds': calibrate takes a single seed");
    }
    cal.options.validate();
    const std::uint64_t seed = config.seeds.empty() ? 0 : config.seeds.front();
    const Stopwatch clock;
    const auto family = make_target_family(cal.family);

    // Same per-point seeds as entropy_shots_sweep, spread over the pool.
    std::vector<CalibrationPoint> points(family.size());
    parallel_for(family.size(), config.jobs, [&](std::size_t i) {
        auto &p = points[i];
        p.entropy_bits = entropy(family[i]);
        p.required_shots = required_shots(family[i], cal.options, derive_seed(seed, Stream::target, {i}));
        p.target_distance = cal.options.hd_budget;
        p.confidence = cal.options.confidence;
        p.trials = cal.options.trials;
        p.seed = seed;
    });

    std::vector<HellingerPoint> hpoints(cal.hellinger_qubits.size() * cal.hellinger_shots.size());
    parallel_for(hpoints.size(), config.jobs, [&](std::size_t i) {
        const std::size_t n = cal.hellinger_qubits[i / cal.hellinger_shots.size()];
        const std::uint64_t s = cal.hellinger_shots[i % cal.hellinger_shots.size()];
        hpoints[i] = hellinger_sweep({n}, {s}, cal.hellinger_trials, seed).front();
    });

    json fit = points.size() >= 2 ? calibration_fit_json(fit_calibration(points)) : json();
    json fam = json::array();
    for (const auto &spec : cal.family) {
        fam.push_back(target_spec_to_json(spec));
    }
    write_file_atomic(config.out / "calibration.csv", calibration_to_csv(points));
    write_file_atomic(config.out / "calibration_fit.json",
                      json{{"fit", fit}, {"family", fam}, {"seed", seed}}.dump(2) + "\n");
    write_file_atomic(config.out / "hellinger.csv", hellinger_sweep_to_csv(hpoints, cal.hellinger_trials, seed));
    write_meta(config.out, "calibrate", config.jobs, clock.seconds(), json::object());
    return points;
}

std::vector<SweepKRow> run_sweep_k(const RunConfig &config, const ShotPolicy &base_policy) {
    if (!config.problem) {
        throw ConfigError("config field 'problem': required");
    }
    if (config.seeds.empty()) {
        throw ConfigError("config field 'seeds': at least one seed is required");
    }
    const auto &ks = config.sweep_k.k_values;
    if (ks.empty()) {
        throw ConfigError("config field 'sweep_k.k_values': must not be empty");
    }
    const Stopwatch clock;
    const std::size_t n_seeds = config.seeds.size();
    std::vector<TrainLog> logs(ks.size() * n_seeds);
    parallel_for(logs.size(), config.jobs, [&](std::size_t i) {
        ShotPolicy p = base_policy;
        p.k = ks[i / n_seeds];
        p.name = std::string(policy_kind_name(p.kind)) + "_k" + format_double(*p.k);
        logs[i] = train(*config.problem, p, config.noise, config.train, config.seeds[i % n_seeds]);
    });

    std::vector<SweepKRow> rows;
    std::string runs = "k,seed,s_tot,i_tot,final_cost,arg\n";
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        std::vector<double> s_tot;
        std::vector<double> cost;
        std::vector<TrainLog> group;
        for (std::size_t si = 0; si < n_seeds; ++si) {
            const auto &log = logs[ki * n_seeds + si];
            s_tot.push_back(static_cast<double>(log.s_tot));
            cost.push_back(log.final_evaluation.cost);
            group.push_back(log);
            runs += csv_row({format_double(ks[ki]), std::to_string(log.seed), std::to_string(log.s_tot),
                             std::to_string(log.i_tot), format_double(log.final_evaluation.cost),
                             optional_field(log.arg())});
        }
        const auto s = summarize(group);
        rows.push_back({ks[ki], n_seeds, mean(s_tot), standard_error(s_tot), mean(cost), standard_error(cost), s.arg});
    }
    std::string csv = "k,seeds,mean_s_tot,s_tot_se,mean_final_cost,final_cost_se,mean_arg\n";
    for (const auto &r : rows) {
        csv += csv_row({format_double(r.k), std::to_string(r.seeds), format_double(r.s_tot), format_double(r.s_tot_se),
                        format_double(r.final_cost), format_double(r.final_cost_se), optional_field(r.arg)});
    }
    write_file_atomic(config.out / "sweep_k.csv", csv);
    write_file_atomic(config.out / "sweep_k_runs.csv", runs);
    json timing = json::array();
    for (const auto &log : logs) {
        timing.push_back(train_log_timing_json(log));
    }
    write_meta(config.out, "sweep-k", config.jobs, clock.seconds(), {{"runs", timing}});
    return rows;
}

std::string run_compare(const std::vector<fs::path> &inputs, const fs::path &out, const std::string &baseline) {
    if (inputs.empty()) {
        throw std::invalid_argument("compare needs at least one log file or directory");
    }
    std::vector<fs::path> files;
    for (const auto &in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<fs::path> found;
            for (const auto &e : fs::recursive_directory_iterator(in)) {
                if (e.is_regular_file() && e.path().extension() == ".json") {
                    found.push_back(e.path());
                }
            }
            std::sort(found.begin(), found.end());
            for (const auto &f : found) {
                const json j = json::parse(read_text_file(f), nullptr, false);
                if (!j.is_discarded() && j.is_object() && j.value("format", std::string()) == "dds-trainlog/1") {
                    files.push_back(f);
                }
            }
        } else {
            files.push_back(in);
        }
    }
    if (files.empty()) {
        throw std::invalid_argument("no training logs found in the given inputs");
    }
    std::vector<TrainLog> logs;
    for (const auto &f : files) {
        json j;
        try {
            j = json::parse(read_text_file(f));
        } catch (const json::parse_error &e) {
            throw std::invalid_argument(f.string() + ": " + e.what());
        }
        try {
            logs.push_back(train_log_from_json(j));
        } catch (const std::exception &e) {
            throw std::invalid_argument(f.string() + ": " + e.what());
        }
    }
    const std::string csv = comparison_csv(compare_logs(logs, baseline));
    if (!out.empty()) {
        write_file_atomic(out / "comparison.csv", csv);
    }
    return csv;
}

fs::path run_gen_graph(const GraphInstance &instance, const fs::path &out) {
    const fs::path path = out / (std::string(model_name(instance.model)) + "_n" +
                                 std::to_string(instance.graph.n_nodes()) + "_seed" + std::to_string(instance.seed) +
                                 ".json");
    write_file_atomic(path, graph_instance_to_json(instance).dump(2) + "\n");
    return path;
}

}  // namespace dds
