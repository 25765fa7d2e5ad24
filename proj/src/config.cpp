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

#include "dds/config.hpp"

#include <set>

#include "dds/io.hpp"

namespace dds {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &field, const std::string &what) {
    throw ConfigError("config field '" + field + "': " + what);
}

// Runs `fn`, re-throwing any failure with the field path attached.
template <typename Fn>
auto at_field(const std::string &field, Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        fail(field, e.what());
    }
}

void reject_unknown(const json &j, const std::string &where, std::initializer_list<const char *> known) {
    if (!j.is_object()) {
        fail(where, "expected an object");
    }
    for (const auto &[key, value] : j.items()) {
        bool ok = false;
        for (const char *k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            fail(where.empty() ? key : where + "." + key, "unknown field");
        }
    }
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &file) {
    std::filesystem::path p(file);
    return p.is_absolute() ? p : base / p;
}

ShotPolicy policy_entry(const json &j) {
    if (j.is_string()) {
        json obj = {{"kind", j.get<std::string>()}};
        return policy_from_json(obj);
    }
    return policy_from_json(j);
}

EntropySource parse_entropy_source(const std::string &s) {
    if (s == "z_group") {
        return EntropySource::z_group;
    }
    if (s == "max_over_groups") {
        return EntropySource::max_over_groups;
    }
    throw std::invalid_argument("expected z_group or max_over_groups, got '" + s + "'");
}

}  // namespace

std::optional<NoiseModel> parse_noise_name(const std::string &name) {
    if (name == "none") {
        return std::nullopt;
    }
    auto preset = find_noise_preset(name);
    if (!preset) {
        std::string names;
        for (const auto &p : builtin_noise_presets()) {
            names += ", " + p.label;
        }
        throw std::invalid_argument("unknown noise preset '" + name + "' (expected none" + names + ")");
    }
    return preset;
}

Problem load_problem(const json &j, const std::filesystem::path &base_dir) {
    const std::string type = at_field("problem.type", [&] { return j.at("type").get<std::string>(); });
    if (type == "qaoa") {
        reject_unknown(j, "problem", {"type", "layers", "graph", "graph_file"});
        QaoaProblem q;
        q.layers = at_field("problem.layers", [&] { return j.value("layers", std::size_t{1}); });
        if (q.layers < 1) {
            fail("problem.layers", "must be >= 1");
        }
        if (j.contains("graph_file") == j.contains("graph")) {
            fail("problem", "give exactly one of 'graph' or 'graph_file'");
        }
        if (j.contains("graph_file")) {
            q.instance_file = at_field("problem.graph_file", [&] { return j.at("graph_file").get<std::string>(); });
            q.instance = at_field("problem.graph_file", [&] {
                return graph_instance_from_json(json::parse(read_text_file(resolve(base_dir, q.instance_file))));
            });
        } else {
            const json &g = j.at("graph");
            reject_unknown(g, "problem.graph", {"model", "n_nodes", "seed", "params"});
            q.instance.model = at_field("problem.graph.model", [&] { return parse_model(g.at("model").get<std::string>()); });
            q.instance.seed = at_field("problem.graph.seed", [&] { return g.value("seed", std::uint64_t{0}); });
            q.instance.params =
                at_field("problem.graph.params", [&] { return graph_params_from_json(g.value("params", json())); });
            const auto n = at_field("problem.graph.n_nodes", [&] { return g.at("n_nodes").get<std::size_t>(); });
            q.instance.graph = at_field("problem.graph", [&] {
                return generate_graph(q.instance.model, n, q.instance.seed, q.instance.params);
            });
        }
        if (q.instance.graph.edges().empty()) {
            fail("problem.graph", "graph has no edges");
        }
        return q;
    }
    if (type == "hamiltonian") {
        reject_unknown(j, "problem", {"type", "layers", "file", "reference_energy"});
        const std::string file = at_field("problem.file", [&] { return j.at("file").get<std::string>(); });
        Observable obs = at_field("problem.file", [&] { return parse_hamiltonian(read_text_file(resolve(base_dir, file))); });
        HamiltonianProblem h{std::move(obs), 1, std::nullopt, file};
        h.layers = at_field("problem.layers", [&] { return j.value("layers", std::size_t{1}); });
        if (h.layers < 1) {
            fail("problem.layers", "must be >= 1");
        }
        if (j.contains("reference_energy") && !j.at("reference_energy").is_null()) {
            h.reference_energy = at_field("problem.reference_energy", [&] { return j.at("reference_energy").get<double>(); });
        }
        return h;
    }
    fail("problem.type", "expected 'qaoa' or 'hamiltonian', got '" + type + "'");
}

RunConfig parse_run_config(const json &j, const std::filesystem::path &base_dir) {
    reject_unknown(j, "", {"problem", "policies", "noise", "trajectory_batch", "entropy_source", "optimizer",
                           "initial_parameters", "final_shots", "seeds", "out", "jobs", "calibration", "sweep_k"});
    RunConfig c;
    if (j.contains("problem")) {
        c.problem = load_problem(j.at("problem"), base_dir);
    }
    if (j.contains("policies")) {
        const auto &ps = j.at("policies");
        if (!ps.is_array()) {
            fail("policies", "expected an array");
        }
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const std::string field = "policies[" + std::to_string(i) + "]";
            ShotPolicy p = at_field(field, [&] { return policy_entry(ps[i]); });
            at_field(field, [&] { p.validate(); });
            c.policies.push_back(p);
        }
        std::set<std::string> labels;
        for (const auto &p : c.policies) {
            if (!labels.insert(p.label()).second) {
                fail("policies", "duplicate policy label '" + p.label() + "'; set distinct 'name' fields");
            }
        }
    }
    if (j.contains("noise")) {
        const auto &n = j.at("noise");
        if (n.is_null()) {
            c.noise = std::nullopt;
        } else if (n.is_string()) {
            c.noise = at_field("noise", [&] { return parse_noise_name(n.get<std::string>()); });
        } else {
            reject_unknown(n, "noise", {"p1", "p2", "label"});
            c.noise = at_field("noise", [&] {
                return NoiseModel(n.at("p1").get<double>(), n.at("p2").get<double>(), n.value("label", std::string("custom")));
            });
        }
    }
    c.train.trajectory_batch =
        at_field("trajectory_batch", [&] { return j.value("trajectory_batch", std::uint64_t{1}); });
    if (c.train.trajectory_batch < 1) {
        fail("trajectory_batch", "must be >= 1");
    }
    if (j.contains("entropy_source")) {
        c.train.entropy_source =
            at_field("entropy_source", [&] { return parse_entropy_source(j.at("entropy_source").get<std::string>()); });
    }
    if (j.contains("optimizer")) {
        const auto &o = j.at("optimizer");
        reject_unknown(o, "optimizer", {"max_iterations", "initial_step", "convergence_tolerance"});
        at_field("optimizer", [&] {
            c.train.optimizer.max_iterations = o.value("max_iterations", c.train.optimizer.max_iterations);
            c.train.optimizer.initial_step = o.value("initial_step", c.train.optimizer.initial_step);
            c.train.optimizer.convergence_tolerance =
                o.value("convergence_tolerance", c.train.optimizer.convergence_tolerance);
            c.train.optimizer.validate();
        });
    }
    if (j.contains("initial_parameters")) {
        c.train.initial_parameters =
            at_field("initial_parameters", [&] { return j.at("initial_parameters").get<std::vector<double>>(); });
    }
    c.train.final_shots = at_field("final_shots", [&] { return j.value("final_shots", std::uint64_t{1024}); });
    if (c.train.final_shots < 1) {
        fail("final_shots", "must be >= 1");
    }
    if (j.contains("seeds")) {
        c.seeds = at_field("seeds", [&] { return j.at("seeds").get<std::vector<std::uint64_t>>(); });
        std::set<std::uint64_t> unique(c.seeds.begin(), c.seeds.end());
        if (unique.size() != c.seeds.size()) {
            fail("seeds", "duplicate seed");
        }
    }
    if (j.contains("out")) {
        c.out = at_field("out", [&] { return j.at("out").get<std::string>(); });
    }
    c.jobs = at_field("jobs", [&] { return j.value("jobs", std::size_t{1}); });
    if (c.jobs < 1) {
        fail("jobs", "must be >= 1");
    }
    if (j.contains("calibration")) {
        const auto &cal = j.at("calibration");
        reject_unknown(cal, "calibration",
                       {"hd_budget", "confidence", "trials", "family", "hellinger_qubits", "hellinger_shots",
                        "hellinger_trials"});
        auto &cc = c.calibration;
        at_field("calibration", [&] {
            cc.options.hd_budget = cal.value("hd_budget", cc.options.hd_budget);
            cc.options.confidence = cal.value("confidence", cc.options.confidence);
            cc.options.trials = cal.value("trials", cc.options.trials);
            cc.options.validate();
            cc.hellinger_qubits = cal.value("hellinger_qubits", cc.hellinger_qubits);
            cc.hellinger_shots = cal.value("hellinger_shots", cc.hellinger_shots);
            cc.hellinger_trials = cal.value("hellinger_trials", cc.hellinger_trials);
        });
        if (cal.contains("family")) {
            cc.family.clear();
            const auto &fam = cal.at("family");
            if (!fam.is_array()) {
                fail("calibration.family", "expected an array");
            }
            for (std::size_t i = 0; i < fam.size(); ++i) {
                const std::string field = "calibration.family[" + std::to_string(i) + "]";
                cc.family.push_back(at_field(field, [&] {
                    auto spec = target_spec_from_json(fam[i]);
                    make_target(spec);  // validates
                    return spec;
                }));
            }
        }
    }
    if (j.contains("sweep_k")) {
        const auto &sk = j.at("sweep_k");
        reject_unknown(sk, "sweep_k", {"k_values", "cap"});
        at_field("sweep_k", [&] {
            c.sweep_k.k_values = sk.value("k_values", c.sweep_k.k_values);
            c.sweep_k.cap = sk.value("cap", c.sweep_k.cap);
        });
        if (c.sweep_k.k_values.empty()) {
            fail("sweep_k.k_values", "must not be empty");
        }
        for (double k : c.sweep_k.k_values) {
            if (!(k > 0.0)) {
                fail("sweep_k.k_values", "entries must be > 0");
            }
        }
        if (c.sweep_k.cap < 1) {
            fail("sweep_k.cap", "must be >= 1");
        }
    }
    return c;
}

RunConfig load_run_config(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_run_config(j, path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

void validate_for_training(const RunConfig &config) {
    if (!config.problem) {
        throw ConfigError("config field 'problem': required");
    }
    if (config.policies.empty()) {
        throw ConfigError("config field 'policies': at least one policy is required");
    }
    if (config.seeds.empty()) {
        throw ConfigError("config field 'seeds': at least one seed is required");
    }
}

}  // namespace dds
