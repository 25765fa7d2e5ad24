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

#include "dds/allocation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace dds {

std::string_view policy_kind_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::fixed:
            return "fixed";
        case PolicyKind::linear:
            return "linear";
        case PolicyKind::step:
            return "step";
        case PolicyKind::dds:
            return "dds";
        case PolicyKind::dds_m:
            return "dds_m";
    }
    return "?";
}

PolicyKind parse_policy_kind(std::string_view name) {
    for (auto k : {PolicyKind::fixed, PolicyKind::linear, PolicyKind::step, PolicyKind::dds, PolicyKind::dds_m}) {
        if (name == policy_kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown policy kind '" + std::string(name) +
                                "' (expected fixed, linear, step, dds or dds_m)");
}

ShotPolicy ShotPolicy::fixed(std::uint64_t shots) {
    ShotPolicy p;
    p.kind = PolicyKind::fixed;
    p.s_fixed = shots;
    return p;
}

ShotPolicy ShotPolicy::linear() {
    ShotPolicy p;
    p.kind = PolicyKind::linear;
    return p;
}

ShotPolicy ShotPolicy::step() {
    ShotPolicy p;
    p.kind = PolicyKind::step;
    return p;
}

ShotPolicy ShotPolicy::dds(std::optional<double> k) {
    ShotPolicy p;
    p.kind = PolicyKind::dds;
    p.k = k;
    p.cap = kDdsCap;
    return p;
}

ShotPolicy ShotPolicy::dds_m(std::optional<double> k) {
    ShotPolicy p;
    p.kind = PolicyKind::dds_m;
    p.k = k;
    p.cap = kDdsMCap;
    return p;
}

std::string ShotPolicy::label() const { return name.empty() ? std::string(policy_kind_name(kind)) : name; }

void ShotPolicy::validate() const {
    if (floor < 1) {
        throw std::invalid_argument("policy floor must be >= 1");
    }
    if (cap < 1) {
        throw std::invalid_argument("policy cap must be >= 1");
    }
    if (kind == PolicyKind::fixed && s_fixed < 1) {
        throw std::invalid_argument("fixed shot count must be >= 1");
    }
    if (k && !(*k > 0.0 && std::isfinite(*k))) {
        throw std::invalid_argument("policy k must be a positive finite number");
    }
    if (!(initial_entropy >= 0.0)) {
        throw std::invalid_argument("initial entropy must be >= 0");
    }
}

std::uint64_t next_shots(const ShotPolicy &policy, std::uint64_t iteration, double prev_entropy) {
    switch (policy.kind) {
        case PolicyKind::fixed:
            return policy.s_fixed;
        case PolicyKind::linear: {
            const std::uint64_t drop = policy.slope_l * iteration;
            const std::uint64_t raw = drop >= policy.s_begin ? 0 : policy.s_begin - drop;
            return std::max(policy.floor, raw);
        }
        case PolicyKind::step: {
            const std::uint64_t drop = 10 * policy.slope_l * (iteration / 10);
            const std::uint64_t raw = drop >= policy.s_begin ? 0 : policy.s_begin - drop;
            return std::max(policy.floor, raw);
        }
        case PolicyKind::dds:
        case PolicyKind::dds_m: {
            if (!policy.k) {
                throw std::invalid_argument("entropy-driven policy needs k");
            }
            if (!(prev_entropy >= 0.0)) {
                throw std::invalid_argument("entropy must be >= 0");
            }
            const double raw = *policy.k * std::exp2(prev_entropy);
            const auto cap = static_cast<double>(policy.cap);
            if (!(raw < cap)) {
                return policy.cap;
            }
            // Round half up; raw < cap keeps the cast in range.
            const auto rounded = static_cast<std::uint64_t>(std::floor(raw + 0.5));
            return std::clamp<std::uint64_t>(rounded, 1, policy.cap);
        }
    }
    throw std::invalid_argument("unknown policy kind");
}

double default_k(std::size_t n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("qubit count must be >= 1");
    }
    struct Anchor {
        double qubits;
        double log2_k;
    };
    constexpr std::array<Anchor, 3> anchors{{{4, 6}, {8, 3}, {12, 1}}};
    const auto n = static_cast<double>(n_qubits);
    // Segment containing n, or the nearest one for extrapolation.
    const std::size_t seg = n <= anchors[1].qubits ? 0 : 1;
    const Anchor a = anchors[seg], b = anchors[seg + 1];
    const double log2_k = a.log2_k + (n - a.qubits) * (b.log2_k - a.log2_k) / (b.qubits - a.qubits);
    return std::clamp(std::exp2(log2_k), 1.0, 64.0);
}

ShotPolicy policy_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::invalid_argument("policy block needs a 'kind' field");
    }
    const PolicyKind kind = parse_policy_kind(j.at("kind").get<std::string>());
    ShotPolicy p;
    switch (kind) {
        case PolicyKind::fixed:
            p = ShotPolicy::fixed();
            break;
        case PolicyKind::linear:
            p = ShotPolicy::linear();
            break;
        case PolicyKind::step:
            p = ShotPolicy::step();
            break;
        case PolicyKind::dds:
            p = ShotPolicy::dds();
            break;
        case PolicyKind::dds_m:
            p = ShotPolicy::dds_m();
            break;
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "kind") {
            continue;
        } else if (key == "s_fixed") {
            p.s_fixed = value.get<std::uint64_t>();
        } else if (key == "s_begin") {
            p.s_begin = value.get<std::uint64_t>();
        } else if (key == "slope_l") {
            p.slope_l = value.get<std::uint64_t>();
        } else if (key == "floor") {
            p.floor = value.get<std::uint64_t>();
        } else if (key == "k") {
            p.k = value.get<double>();
        } else if (key == "cap") {
            p.cap = value.get<std::uint64_t>();
        } else if (key == "initial_entropy") {
            p.initial_entropy = value.get<double>();
        } else if (key == "name") {
            p.name = value.get<std::string>();
        } else {
            throw std::invalid_argument("unknown policy field '" + key + "'");
        }
    }
    p.validate();
    return p;
}

nlohmann::json policy_to_json(const ShotPolicy &p) {
    nlohmann::json j{{"kind", std::string(policy_kind_name(p.kind))}, {"name", p.label()}};
    switch (p.kind) {
        case PolicyKind::fixed:
            j["s_fixed"] = p.s_fixed;
            break;
        case PolicyKind::linear:
        case PolicyKind::step:
            j["s_begin"] = p.s_begin;
            j["slope_l"] = p.slope_l;
            j["floor"] = p.floor;
            break;
        case PolicyKind::dds:
        case PolicyKind::dds_m:
            if (p.k) {
                j["k"] = *p.k;
            }
            j["cap"] = p.cap;
            j["initial_entropy"] = p.initial_entropy;
            break;
    }
    return j;
}

}  // namespace dds
