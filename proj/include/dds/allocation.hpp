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

#include "json.hpp"

namespace dds {

enum class PolicyKind { fixed, linear, step, dds, dds_m };

std::string_view policy_kind_name(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view name);

/// Per-iteration shot schedule.
///
///   fixed   s_fixed
///   linear  max(floor, s_begin − l·i)
///   step    max(floor, s_begin − 10·l·⌊i/10⌋)
///   dds     min(cap, round(k·2^H_{i−1})), at least 1; H_{−1} = initial_entropy
///   dds_m   same as dds with the larger default cap
struct ShotPolicy {
    PolicyKind kind = PolicyKind::fixed;
    std::uint64_t s_fixed = 1024;
    std::uint64_t s_begin = 1000;
    std::uint64_t slope_l = 10;
    std::uint64_t floor = 20;
    std::optional<double> k;  // unset: default_k(n_qubits) at train time
    std::uint64_t cap = 1024;
    double initial_entropy = 10.0;
    std::string name;  // display label; empty means the kind name

    static ShotPolicy fixed(std::uint64_t shots = 1024);
    static ShotPolicy linear();
    static ShotPolicy step();
    static ShotPolicy dds(std::optional<double> k = std::nullopt);
    static ShotPolicy dds_m(std::optional<double> k = std::nullopt);

    std::string label() const;
    /// Throws on floor/cap < 1 or k <= 0.
    void validate() const;
    bool is_entropy_driven() const { return kind == PolicyKind::dds || kind == PolicyKind::dds_m; }
};

inline constexpr std::uint64_t kDdsCap = 1024;
inline constexpr std::uint64_t kDdsMCap = 100000;

/// Shots for iteration `iteration` (0-based). `prev_entropy` is the entropy in
/// bits of the previous iteration's counts and is ignored by tiered kinds.
/// Entropy-driven kinds need `policy.k` to be set.
std::uint64_t next_shots(const ShotPolicy &policy, std::uint64_t iteration, double prev_entropy);

/// Constant k anchored at {4: 64, 8: 8, 12: 2} qubits, piecewise-linear in
/// log2 k between anchors (extrapolated with the nearest segment), clamped to
/// [1, 64].
double default_k(std::size_t n_qubits);

/// Policy block {kind, s_fixed?, s_begin?, slope_l?, floor?, k?, cap?,
/// initial_entropy?, name?}.
ShotPolicy policy_from_json(const nlohmann::json &j);
nlohmann::json policy_to_json(const ShotPolicy &policy);

}  // namespace dds
