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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace dds {

enum class GraphModel { PL, BA, WS, SK };

std::string_view model_name(GraphModel model);
GraphModel parse_model(std::string_view name);

/// Generator knobs. Defaults: BA m=2; WS ring degree 4 with rewiring 0.3;
/// PL is Holme–Kim power-law-cluster with m=2 and triad probability 0.5.
struct GraphParams {
    std::size_t ba_m = 2;
    std::size_t ws_k = 4;
    double ws_p = 0.3;
    std::size_t pl_m = 2;
    double pl_p = 0.5;

    bool operator==(const GraphParams &) const = default;
};

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 1.0;

    bool operator==(const Edge &) const = default;
};

class WeightedGraph {
   public:
    /// Validates node range, self loops and duplicate unordered pairs.
    WeightedGraph(std::size_t n_nodes, std::vector<Edge> edges);

    std::size_t n_nodes() const { return n_nodes_; }
    const std::vector<Edge> &edges() const { return edges_; }
    double total_weight() const;

    bool operator==(const WeightedGraph &) const = default;

   private:
    std::size_t n_nodes_;
    std::vector<Edge> edges_;
};

/// A generated graph plus the inputs that reproduce it.
struct GraphInstance {
    GraphModel model = GraphModel::SK;
    std::uint64_t seed = 0;
    GraphParams params;
    WeightedGraph graph{2, {}};
};

WeightedGraph generate_graph(GraphModel model, std::size_t n_nodes, std::uint64_t seed,
                             const GraphParams &params = {});

/// Basis-state index z is an assignment: node i is on side (z >> i) & 1.
double cut_value(const WeightedGraph &graph, std::uint64_t assignment);
/// Bitstring form, rightmost character = node 0.
double cut_value(const WeightedGraph &graph, std::string_view bitstring);

/// cut_value for every assignment, indexed by z.
std::vector<double> all_cut_values(const WeightedGraph &graph);

inline constexpr std::size_t kMaxBruteForceNodes = 20;

struct CutResult {
    double best_value = 0.0;
    std::vector<std::uint64_t> maximizers;  // ascending
};

CutResult brute_force_max_cut(const WeightedGraph &graph);

/// Instance file: {model, n_nodes, seed, params, edges:[[u,v,w],...]}.
nlohmann::json graph_instance_to_json(const GraphInstance &instance);
GraphInstance graph_instance_from_json(const nlohmann::json &j);
nlohmann::json graph_params_to_json(const GraphParams &params);
GraphParams graph_params_from_json(const nlohmann::json &j);

}  // namespace dds
