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

// Python bindings. Structured results cross the boundary as JSON text; the
// package wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dds/allocation.hpp"
#include "dds/calibration.hpp"
#include "dds/config.hpp"
#include "dds/graphs.hpp"
#include "dds/sampling.hpp"
#include "dds/training.hpp"

namespace py = pybind11;

namespace {

std::uint64_t next_shots_py(const std::string &kind, std::uint64_t iteration, double prev_entropy,
                            std::optional<double> k) {
    dds::ShotPolicy policy;
    policy.kind = dds::parse_policy_kind(kind);
    if (policy.kind == dds::PolicyKind::dds_m) {
        policy.cap = dds::kDdsMCap;
    }
    policy.k = k;
    policy.validate();
    return dds::next_shots(policy, iteration, prev_entropy);
}

std::string generate_graph_py(const std::string &model, std::size_t n_nodes, std::uint64_t seed) {
    dds::GraphInstance inst;
    inst.model = dds::parse_model(model);
    inst.seed = seed;
    inst.graph = dds::generate_graph(inst.model, n_nodes, seed);
    return dds::graph_instance_to_json(inst).dump();
}

py::tuple max_cut_py(const std::string &graph_json) {
    const auto inst = dds::graph_instance_from_json(nlohmann::json::parse(graph_json));
    const auto r = dds::brute_force_max_cut(inst.graph);
    return py::make_tuple(r.best_value, r.maximizers);
}

// Every (policy, seed) log of a run configuration, in config order.
std::vector<std::string> train_py(const std::string &config_json, const std::string &base_dir) {
    const auto config = dds::parse_run_config(nlohmann::json::parse(config_json), base_dir);
    dds::validate_for_training(config);
    std::vector<std::string> out;
    py::gil_scoped_release release;
    for (const auto &policy : config.policies) {
        for (auto seed : config.seeds) {
            out.push_back(dds::train_log_to_json(dds::train(*config.problem, policy, config.noise, config.train, seed)).dump());
        }
    }
    return out;
}

std::uint64_t required_shots_py(const std::vector<double> &probabilities, double hd_budget, double confidence,
                                std::uint64_t trials, std::uint64_t seed) {
    const dds::CalibrationOptions options{hd_budget, confidence, trials};
    options.validate();
    py::gil_scoped_release release;
    return dds::required_shots(dds::ProbDist(probabilities), options, seed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distribution-adaptive shot allocation workbench (native core)";
    m.def(
        "entropy", [](const std::vector<double> &p) { return dds::entropy(dds::ProbDist(p)); }, py::arg("probabilities"),
        "Shannon entropy in bits.");
    m.def(
        "hellinger",
        [](const std::vector<double> &p, const std::vector<double> &q) {
            return dds::hellinger(dds::ProbDist(p), dds::ProbDist(q));
        },
        py::arg("p"), py::arg("q"));
    m.def("arg_metric", &dds::arg_metric, py::arg("e_ideal"), py::arg("e_real"));
    m.def("default_k", &dds::default_k, py::arg("n_qubits"));
    m.def("next_shots", &next_shots_py, py::arg("kind"), py::arg("iteration"), py::arg("prev_entropy") = 10.0,
          py::arg("k") = py::none());
    m.def("generate_graph_json", &generate_graph_py, py::arg("model"), py::arg("n_nodes"), py::arg("seed"));
    m.def("max_cut", &max_cut_py, py::arg("graph_json"));
    m.def("train_json", &train_py, py::arg("config_json"), py::arg("base_dir") = ".");
    m.def("required_shots", &required_shots_py, py::arg("probabilities"), py::arg("hd_budget") = 0.05,
          py::arg("confidence") = 0.9, py::arg("trials") = 100, py::arg("seed") = 0);
}
