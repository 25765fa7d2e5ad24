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

#include "dds/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <cctype>
#include <utility>

#include "dds/rng.hpp"

namespace dds {

namespace {

using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

WeightedGraph from_pairs(std::size_t n, const EdgeSet &pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto &[u, v] : pairs) {
        edges.push_back({u, v, 1.0});
    }
    return WeightedGraph(n, std::move(edges));
}

// Picks a node with probability proportional to its degree, falling back to a
// uniform choice among [0, n_existing) while no edges exist yet.
std::size_t preferential_pick(Rng &rng, const std::vector<std::size_t> &pool, std::size_t n_existing) {
    if (pool.empty()) {
        return rng.below(n_existing);
    }
    return pool[rng.below(pool.size())];
}

// Initial core shared by BA and PL: a clique on nodes [0, m).
void seed_core(std::size_t m, EdgeSet &edges, std::vector<std::size_t> &pool) {
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            edges.insert({a, b});
            pool.push_back(a);
            pool.push_back(b);
        }
    }
}

WeightedGraph barabasi_albert(std::size_t n, std::size_t m, Rng &rng) {
    if (m < 1 || m >= n) {
        throw std::invalid_argument("BA attachment m must satisfy 1 <= m < n_nodes");
    }
    EdgeSet edges;
    std::vector<std::size_t> pool;
    seed_core(m, edges, pool);
    for (std::size_t v = m; v < n; ++v) {
        std::vector<std::size_t> targets;
        while (targets.size() < m) {
            const std::size_t t = preferential_pick(rng, pool, v);
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }
        for (std::size_t t : targets) {
            edges.insert(ordered(t, v));
            pool.push_back(t);
            pool.push_back(v);
        }
    }
    return from_pairs(n, edges);
}

WeightedGraph powerlaw_cluster(std::size_t n, std::size_t m, double p, Rng &rng) {
    if (m < 1 || m >= n) {
        throw std::invalid_argument("PL attachment m must satisfy 1 <= m < n_nodes");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("PL triad probability must be in [0, 1]");
    }
    EdgeSet edges;
    std::vector<std::size_t> pool;
    std::vector<std::vector<std::size_t>> adj(n);
    seed_core(m, edges, pool);
    for (const auto &[a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t v = m; v < n; ++v) {
        std::vector<std::size_t> targets;
        auto connected = [&](std::size_t t) { return std::find(targets.begin(), targets.end(), t) != targets.end(); };
        std::size_t last_pa = preferential_pick(rng, pool, v);
        targets.push_back(last_pa);
        while (targets.size() < m) {
            if (rng.uniform() < p) {
                std::vector<std::size_t> candidates;
                for (std::size_t w : adj[last_pa]) {
                    if (!connected(w)) {
                        candidates.push_back(w);
                    }
                }
                if (!candidates.empty()) {
                    targets.push_back(candidates[rng.below(candidates.size())]);
                    continue;
                }
            }
            const std::size_t t = preferential_pick(rng, pool, v);
            if (!connected(t)) {
                targets.push_back(t);
                last_pa = t;
            }
        }
        for (std::size_t t : targets) {
            edges.insert(ordered(t, v));
            adj[t].push_back(v);
            adj[v].push_back(t);
            pool.push_back(t);
            pool.push_back(v);
        }
    }
    return from_pairs(n, edges);
}

WeightedGraph watts_strogatz(std::size_t n, std::size_t k, double p, Rng &rng) {
    if (k < 2 || k % 2 != 0 || k >= n) {
        throw std::invalid_argument("WS ring degree k must be even with 2 <= k < n_nodes");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("WS rewiring probability must be in [0, 1]");
    }
    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= k / 2; ++j) {
            const std::size_t v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    // Rewire lattice edge (u, u+j) to (u, w), outer loop over ring distance.
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (std::size_t u = 0; u < n; ++u) {
            const std::size_t v = (u + j) % n;
            if (rng.uniform() >= p || !adj[u].contains(v) || adj[u].size() >= n - 1) {
                continue;
            }
            std::size_t w = rng.below(n);
            while (w == u || adj[u].contains(w)) {
                w = rng.below(n);
            }
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    EdgeSet edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v : adj[u]) {
            if (u < v) {
                edges.insert({u, v});
            }
        }
    }
    return from_pairs(n, edges);
}

WeightedGraph sherrington_kirkpatrick(std::size_t n, Rng &rng) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            edges.push_back({u, v, rng.bernoulli(0.5) ? 1.0 : -1.0});
        }
    }
    return WeightedGraph(n, std::move(edges));
}

}  // namespace

std::string_view model_name(GraphModel model) {
    switch (model) {
        case GraphModel::PL:
            return "PL";
        case GraphModel::BA:
            return "BA";
        case GraphModel::WS:
            return "WS";
        case GraphModel::SK:
            return "SK";
    }
    return "?";
}

GraphModel parse_model(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (auto m : {GraphModel::PL, GraphModel::BA, GraphModel::WS, GraphModel::SK}) {
        if (upper == model_name(m)) {
            return m;
        }
    }
    throw std::invalid_argument("unknown graph model '" + std::string(name) + "' (expected PL, BA, WS or SK)");
}

WeightedGraph::WeightedGraph(std::size_t n_nodes, std::vector<Edge> edges) : n_nodes_(n_nodes), edges_(std::move(edges)) {
    if (n_nodes_ < 2) {
        throw std::invalid_argument("graph needs at least 2 nodes");
    }
    EdgeSet seen;
    for (const auto &e : edges_) {
        if (e.u >= n_nodes_ || e.v >= n_nodes_) {
            throw std::out_of_range("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self loop on node " + std::to_string(e.u));
        }
        if (!seen.insert(ordered(e.u, e.v)).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
        }
    }
}

double WeightedGraph::total_weight() const {
    double total = 0.0;
    for (const auto &e : edges_) {
        total += e.weight;
    }
    return total;
}

WeightedGraph generate_graph(GraphModel model, std::size_t n_nodes, std::uint64_t seed, const GraphParams &params) {
    if (n_nodes < 2) {
        throw std::invalid_argument("graph needs at least 2 nodes");
    }
    Rng rng(derive_seed(seed, Stream::graph, {static_cast<std::uint64_t>(model)}));
    switch (model) {
        case GraphModel::BA:
            return barabasi_albert(n_nodes, params.ba_m, rng);
        case GraphModel::PL:
            return powerlaw_cluster(n_nodes, params.pl_m, params.pl_p, rng);
        case GraphModel::WS:
            return watts_strogatz(n_nodes, params.ws_k, params.ws_p, rng);
        case GraphModel::SK:
            return sherrington_kirkpatrick(n_nodes, rng);
    }
    throw std::invalid_argument("unknown graph model");
}

double cut_value(const WeightedGraph &graph, std::uint64_t assignment) {
    double total = 0.0;
    for (const auto &e : graph.edges()) {
        if (((assignment >> e.u) ^ (assignment >> e.v)) & 1U) {
            total += e.weight;
        }
    }
    return total;
}

double cut_value(const WeightedGraph &graph, std::string_view bitstring) {
    if (bitstring.size() != graph.n_nodes()) {
        throw std::invalid_argument("bitstring length " + std::to_string(bitstring.size()) + " != n_nodes " +
                                    std::to_string(graph.n_nodes()));
    }
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < bitstring.size(); ++i) {
        const char c = bitstring[bitstring.size() - 1 - i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain '0' and '1'");
        }
        if (c == '1') {
            z |= std::uint64_t{1} << i;
        }
    }
    return cut_value(graph, z);
}

std::vector<double> all_cut_values(const WeightedGraph &graph) {
    if (graph.n_nodes() > 30) {
        throw std::invalid_argument("too many nodes to tabulate every cut");
    }
    std::vector<double> values(std::size_t{1} << graph.n_nodes());
    for (std::size_t z = 0; z < values.size(); ++z) {
        values[z] = cut_value(graph, z);
    }
    return values;
}

CutResult brute_force_max_cut(const WeightedGraph &graph) {
    if (graph.n_nodes() > kMaxBruteForceNodes) {
        throw std::invalid_argument("brute-force max cut limited to " + std::to_string(kMaxBruteForceNodes) +
                                    " nodes, got " + std::to_string(graph.n_nodes()));
    }
    CutResult result;
    const std::uint64_t dim = std::uint64_t{1} << graph.n_nodes();
    for (std::uint64_t z = 0; z < dim; ++z) {
        const double value = cut_value(graph, z);
        if (z == 0 || value > result.best_value) {
            result.best_value = value;
            result.maximizers.assign(1, z);
        } else if (value == result.best_value) {
            result.maximizers.push_back(z);
        }
    }
    return result;
}

nlohmann::json graph_params_to_json(const GraphParams &p) {
    return {{"ba_m", p.ba_m}, {"ws_k", p.ws_k}, {"ws_p", p.ws_p}, {"pl_m", p.pl_m}, {"pl_p", p.pl_p}};
}

GraphParams graph_params_from_json(const nlohmann::json &j) {
    GraphParams p;
    if (j.is_null()) {
        return p;
    }
    if (!j.is_object()) {
        throw std::invalid_argument("graph params must be an object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "ba_m") {
            p.ba_m = value.get<std::size_t>();
        } else if (key == "ws_k") {
            p.ws_k = value.get<std::size_t>();
        } else if (key == "ws_p") {
            p.ws_p = value.get<double>();
        } else if (key == "pl_m") {
            p.pl_m = value.get<std::size_t>();
        } else if (key == "pl_p") {
            p.pl_p = value.get<double>();
        } else {
            throw std::invalid_argument("unknown graph parameter '" + key + "'");
        }
    }
    return p;
}

nlohmann::json graph_instance_to_json(const GraphInstance &instance) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &e : instance.graph.edges()) {
        edges.push_back({e.u, e.v, e.weight});
    }
    return {{"model", std::string(model_name(instance.model))},
            {"n_nodes", instance.graph.n_nodes()},
            {"seed", instance.seed},
            {"params", graph_params_to_json(instance.params)},
            {"edges", edges}};
}

GraphInstance graph_instance_from_json(const nlohmann::json &j) {
    for (const char *field : {"model", "n_nodes", "edges"}) {
        if (!j.contains(field)) {
            throw std::invalid_argument(std::string("graph instance missing field '") + field + "'");
        }
    }
    GraphInstance inst;
    inst.model = parse_model(j.at("model").get<std::string>());
    inst.seed = j.value("seed", std::uint64_t{0});
    inst.params = graph_params_from_json(j.value("params", nlohmann::json()));
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) {
            throw std::invalid_argument("edge entries must be [u, v, w]");
        }
        edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>()});
    }
    inst.graph = WeightedGraph(j.at("n_nodes").get<std::size_t>(), std::move(edges));
    return inst;
}

}  // namespace dds
