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

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "dds/graphs.hpp"
#include "dds/rng.hpp"

namespace dds {
namespace {

WeightedGraph unit_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<Edge> e;
    for (auto [u, v] : pairs) {
        e.push_back({u, v, 1.0});
    }
    return WeightedGraph(n, e);
}

bool connected(const WeightedGraph &g) {
    std::vector<std::size_t> parent(g.n_nodes());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (const auto &e : g.edges()) {
        parent[find(e.u)] = find(e.v);
    }
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < g.n_nodes(); ++v) {
        roots.insert(find(v));
    }
    return roots.size() == 1;
}

void expect_simple(const WeightedGraph &g) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &e : g.edges()) {
        EXPECT_NE(e.u, e.v);
        EXPECT_LT(e.u, g.n_nodes());
        EXPECT_LT(e.v, g.n_nodes());
        EXPECT_TRUE(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
    }
}

TEST(Graphs, SkIsCompleteWithSignedUnitWeights) {
    const auto g = generate_graph(GraphModel::SK, 4, 1);
    EXPECT_EQ(g.edges().size(), 6u);
    for (const auto &e : g.edges()) {
        EXPECT_TRUE(e.weight == 1.0 || e.weight == -1.0);
    }
    expect_simple(g);
}

TEST(Graphs, BaEdgeCountFromTwoNodeCore) {
    // Core clique on m nodes, then m edges per new node: C(m,2) + m(n-m).
    const auto g = generate_graph(GraphModel::BA, 4, 1);
    EXPECT_EQ(g.edges().size(), 5u);
    EXPECT_TRUE(connected(g));
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t m = 1; m < n; ++m) {
            GraphParams p;
            p.ba_m = m;
            const auto h = generate_graph(GraphModel::BA, n, n * 31 + m, p);
            EXPECT_EQ(h.edges().size(), m * (m - 1) / 2 + m * (n - m)) << n << " " << m;
            EXPECT_TRUE(connected(h));
            expect_simple(h);
        }
    }
}

TEST(Graphs, PowerLawClusterEdgeCount) {
    for (std::size_t n = 3; n <= 14; ++n) {
        const auto g = generate_graph(GraphModel::PL, n, n);
        EXPECT_EQ(g.edges().size(), 1 + 2 * (n - 2));
        EXPECT_TRUE(connected(g));
        expect_simple(g);
    }
}

TEST(Graphs, WattsStrogatzKeepsEdgeCount) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = generate_graph(GraphModel::WS, 10, seed);
        EXPECT_EQ(g.edges().size(), 10u * 4 / 2);
        expect_simple(g);
    }
    GraphParams p;
    p.ws_p = 0.0;
    const auto ring = generate_graph(GraphModel::WS, 6, 3, p);
    for (const auto &e : ring.edges()) {
        const std::size_t d = std::min((e.v + 6 - e.u) % 6, (e.u + 6 - e.v) % 6);
        EXPECT_LE(d, 2u);
    }
}

TEST(Graphs, InvalidParams) {
    EXPECT_THROW(generate_graph(GraphModel::WS, 4, 0), std::invalid_argument);  // k = 4 >= n
    GraphParams odd;
    odd.ws_k = 3;
    EXPECT_THROW(generate_graph(GraphModel::WS, 8, 0, odd), std::invalid_argument);
    GraphParams big_m;
    big_m.ba_m = 5;
    EXPECT_THROW(generate_graph(GraphModel::BA, 5, 0, big_m), std::invalid_argument);
    EXPECT_THROW(generate_graph(GraphModel::SK, 1, 0), std::invalid_argument);
    EXPECT_THROW(parse_model("ER"), std::invalid_argument);
    EXPECT_EQ(parse_model("sk"), GraphModel::SK);
}

TEST(Graphs, DeterministicPerSeed) {
    for (auto m : {GraphModel::PL, GraphModel::BA, GraphModel::WS, GraphModel::SK}) {
        EXPECT_EQ(generate_graph(m, 9, 123), generate_graph(m, 9, 123));
    }
    EXPECT_NE(generate_graph(GraphModel::SK, 9, 1), generate_graph(GraphModel::SK, 9, 2));
}

TEST(Graphs, WeightedGraphValidation) {
    EXPECT_THROW(WeightedGraph(3, {{0, 0, 1.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph(3, {{0, 3, 1.0}}), std::out_of_range);
    EXPECT_THROW(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
}

TEST(MaxCut, Examples) {
    const auto tri = unit_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(brute_force_max_cut(tri).best_value, 2.0);
    const auto edge = unit_graph(2, {{0, 1}});
    const auto r = brute_force_max_cut(edge);
    EXPECT_EQ(r.best_value, 1.0);
    EXPECT_EQ(r.maximizers, (std::vector<std::uint64_t>{0b01, 0b10}));
    const auto cyc = unit_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto c = brute_force_max_cut(cyc);
    EXPECT_EQ(c.best_value, 4.0);
    EXPECT_EQ(c.maximizers, (std::vector<std::uint64_t>{0b0101, 0b1010}));
}

TEST(MaxCut, CutValueExamples) {
    const auto tri = unit_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(cut_value(tri, "000"), 0.0);
    EXPECT_EQ(cut_value(tri, "001"), 2.0);
    const WeightedGraph neg(2, {{0, 1, -1.0}});
    EXPECT_EQ(cut_value(neg, "01"), -1.0);
    EXPECT_THROW(cut_value(tri, "01"), std::invalid_argument);
    EXPECT_THROW(cut_value(tri, "0a1"), std::invalid_argument);
}

TEST(MaxCut, RejectsOversizedGraph) {
    EXPECT_THROW(brute_force_max_cut(WeightedGraph(kMaxBruteForceNodes + 1, {{0, 1, 1.0}})), std::invalid_argument);
}

TEST(MaxCutProperty, BestDominatesRandomAssignments) {
    Rng rng(8);
    for (auto model : {GraphModel::SK, GraphModel::PL, GraphModel::BA, GraphModel::WS}) {
        const auto g = generate_graph(model, 10, 4);
        const auto r = brute_force_max_cut(g);
        for (int i = 0; i < 1000; ++i) {
            EXPECT_GE(r.best_value, cut_value(g, rng.below(1u << 10)));
        }
        ASSERT_FALSE(r.maximizers.empty());
        for (auto z : r.maximizers) {
            EXPECT_EQ(cut_value(g, z), r.best_value);
        }
    }
}

TEST(MaxCutProperty, ComplementSymmetry) {
    const auto g = generate_graph(GraphModel::SK, 9, 17);
    const std::uint64_t mask = (1u << 9) - 1;
    for (std::uint64_t z = 0; z <= mask; ++z) {
        ASSERT_EQ(cut_value(g, z), cut_value(g, z ^ mask));
    }
    const auto r = brute_force_max_cut(g);
    std::set<std::uint64_t> ms(r.maximizers.begin(), r.maximizers.end());
    for (auto z : r.maximizers) {
        EXPECT_TRUE(ms.count(z ^ mask));
    }
}

TEST(MaxCut, AllCutValuesTable) {
    const auto g = generate_graph(GraphModel::BA, 6, 2);
    const auto table = all_cut_values(g);
    ASSERT_EQ(table.size(), 64u);
    for (std::uint64_t z = 0; z < 64; ++z) {
        EXPECT_EQ(table[z], cut_value(g, z));
    }
}

TEST(GraphJson, RoundTrip) {
    GraphInstance inst;
    inst.model = GraphModel::WS;
    inst.seed = 5;
    inst.params.ws_p = 0.25;
    inst.graph = generate_graph(inst.model, 8, inst.seed, inst.params);
    const auto j = graph_instance_to_json(inst);
    EXPECT_EQ(j.at("model"), "WS");
    EXPECT_EQ(j.at("n_nodes"), 8);
    EXPECT_TRUE(j.at("edges").at(0).is_array());
    const auto back = graph_instance_from_json(j);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.params, inst.params);
    EXPECT_EQ(back.seed, 5u);
    EXPECT_THROW(graph_instance_from_json(nlohmann::json{{"model", "SK"}}), std::invalid_argument);
}

}  // namespace
}  // namespace dds
