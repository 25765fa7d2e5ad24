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

// Command-line front end. Exit codes: 0 success, 1 validation error,
// 2 runtime failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dds/config.hpp"
#include "dds/io.hpp"
#include "dds/runner.hpp"

namespace {

using namespace dds;

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct CommonFlags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string policy;
    std::string noise;
    std::optional<std::size_t> jobs;
};

RunConfig load_or_default(const CommonFlags &f) {
    if (f.config.empty()) {
        return RunConfig{};
    }
    return load_run_config(f.config);
}

// Flags take precedence over the config file, which takes precedence over
// built-in defaults.
void apply_overrides(RunConfig &c, const CommonFlags &f) {
    if (f.seed) {
        c.seeds = {*f.seed};
    }
    if (!f.out.empty()) {
        c.out = f.out;
    }
    if (!f.noise.empty()) {
        try {
            c.noise = parse_noise_name(f.noise);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("--noise: ") + e.what());
        }
    }
    if (f.jobs) {
        if (*f.jobs < 1) {
            throw ConfigError("--jobs: must be >= 1");
        }
        c.jobs = *f.jobs;
    }
    if (!f.policy.empty()) {
        for (const auto &p : c.policies) {
            if (p.label() == f.policy) {
                c.policies = {p};
                return;
            }
        }
        try {
            c.policies = {policy_from_json({{"kind", f.policy}})};
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("--policy: ") + e.what());
        }
    }
}

void add_common(CLI::App *cmd, CommonFlags &f, bool config_required, bool with_policy, bool with_noise) {
    auto *opt = cmd->add_option("--config", f.config, "Run configuration (JSON)");
    if (config_required) {
        opt->required();
    }
    cmd->add_option("--seed", f.seed, "Use this single seed instead of the config's seed list");
    cmd->add_option("--out", f.out, "Output directory");
    if (with_policy) {
        cmd->add_option("--policy", f.policy, "Run only this policy (label or kind)");
    }
    if (with_noise) {
        cmd->add_option("--noise", f.noise, "Noise preset name or 'none'");
    }
    cmd->add_option("--jobs", f.jobs, "Worker threads (outputs do not depend on this)");
}

int run(int argc, char **argv) {
    CLI::App app{"Distribution-adaptive dynamic shot workbench"};
    app.require_subcommand(1);

    CommonFlags train_f;
    auto *train_cmd = app.add_subcommand("train", "Train every (policy, seed) pair and write logs and summaries");
    add_common(train_cmd, train_f, true, true, true);

    CommonFlags cal_f;
    auto *cal_cmd = app.add_subcommand("calibrate", "Required shots versus entropy and Hellinger versus shots");
    add_common(cal_cmd, cal_f, false, false, false);

    CommonFlags sweep_f;
    auto *sweep_cmd = app.add_subcommand("sweep-k", "Sweep the DDS constant k (DDS_M cap by default)");
    add_common(sweep_cmd, sweep_f, true, true, true);

    std::vector<std::string> compare_inputs;
    std::string compare_out;
    std::string baseline;
    auto *compare_cmd = app.add_subcommand("compare", "Compare training logs against the fixed-shot baseline");
    compare_cmd->add_option("logs", compare_inputs, "Log files or directories")->required();
    compare_cmd->add_option("--out", compare_out, "Directory for comparison.csv (stdout only when omitted)");
    compare_cmd->add_option("--baseline", baseline, "Baseline policy label (default: the fixed policy)");

    CommonFlags graph_f;
    std::string model;
    std::optional<std::size_t> nodes;
    auto *graph_cmd = app.add_subcommand("gen-graph", "Generate a seeded graph instance as JSON");
    graph_cmd->add_option("--config", graph_f.config, "Configuration with a problem.graph block");
    graph_cmd->add_option("--model", model, "PL, BA, WS or SK");
    graph_cmd->add_option("--nodes", nodes, "Number of nodes");
    graph_cmd->add_option("--seed", graph_f.seed, "Generator seed");
    graph_cmd->add_option("--out", graph_f.out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*train_cmd) {
            RunConfig c = load_or_default(train_f);
            apply_overrides(c, train_f);
            const auto logs = run_train(c);
            std::cout << "wrote " << logs.size() << " training logs to " << (c.out / "logs").string() << "\n";
            std::cout << read_text_file(c.out / "summary.csv");
        } else if (*cal_cmd) {
            RunConfig c = load_or_default(cal_f);
            apply_overrides(c, cal_f);
            const auto points = run_calibrate(c);
            std::cout << "wrote " << points.size() << " calibration points to "
                      << (c.out / "calibration.csv").string() << "\n";
        } else if (*sweep_cmd) {
            RunConfig c = load_or_default(sweep_f);
            ShotPolicy base = ShotPolicy::dds_m();
            if (!sweep_f.policy.empty()) {
                try {
                    base = policy_from_json({{"kind", sweep_f.policy}});
                } catch (const std::invalid_argument &e) {
                    throw ConfigError(std::string("--policy: ") + e.what());
                }
                if (!base.is_entropy_driven()) {
                    throw ConfigError("--policy: sweep-k needs dds or dds_m");
                }
            }
            if (base.kind == PolicyKind::dds_m) {
                base.cap = c.sweep_k.cap;
            }
            sweep_f.policy.clear();
            apply_overrides(c, sweep_f);
            const auto rows = run_sweep_k(c, base);
            std::cout << "wrote " << rows.size() << " sweep rows\n" << read_text_file(c.out / "sweep_k.csv");
        } else if (*compare_cmd) {
            std::vector<std::filesystem::path> paths(compare_inputs.begin(), compare_inputs.end());
            std::cout << run_compare(paths, compare_out, baseline);
        } else if (*graph_cmd) {
            GraphInstance inst;
            std::optional<std::size_t> n = nodes;
            if (!graph_f.config.empty()) {
                const auto j = nlohmann::json::parse(read_text_file(graph_f.config));
                const auto &g = j.at("problem").at("graph");
                inst.model = parse_model(g.at("model").get<std::string>());
                inst.seed = g.value("seed", std::uint64_t{0});
                inst.params = graph_params_from_json(g.value("params", nlohmann::json()));
                if (!n) {
                    n = g.at("n_nodes").get<std::size_t>();
                }
            }
            if (!model.empty()) {
                inst.model = parse_model(model);
            } else if (graph_f.config.empty()) {
                throw ConfigError("gen-graph needs --model or --config");
            }
            if (!n) {
                throw ConfigError("gen-graph needs --nodes or a config with problem.graph.n_nodes");
            }
            if (graph_f.seed) {
                inst.seed = *graph_f.seed;
            }
            inst.graph = generate_graph(inst.model, *n, inst.seed, inst.params);
            const auto path = run_gen_graph(inst, graph_f.out.empty() ? std::filesystem::path(".") : std::filesystem::path(graph_f.out));
            std::cout << path.string() << "\n";
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) { return run(argc, argv); }
