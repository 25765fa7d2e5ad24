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

#include <array>
#include <cstdint>
#include <initializer_list>

namespace dds {

/// Purpose tags mixed into derived seeds so that independent consumers of one
/// run seed never share a random stream.
enum class Stream : std::uint64_t {
    measure = 0x6d656173ULL,
    noise = 0x6e6f6973ULL,
    init = 0x696e6974ULL,
    iteration = 0x69746572ULL,
    final_eval = 0x66696e6cULL,
    graph = 0x67726170ULL,
    trial = 0x7472696cULL,
    group = 0x67727570ULL,
    target = 0x74726774ULL,
};

inline constexpr std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives a child seed from a parent seed and a list of integer keys
/// (iteration index, trial index, ...) plus a purpose tag. Pure function of its
/// inputs, so any job can recompute the seed of any stream.
inline std::uint64_t derive_seed(std::uint64_t seed, Stream tag, std::initializer_list<std::uint64_t> keys = {}) {
    std::uint64_t state = seed;
    std::uint64_t h = splitmix64(state);
    auto absorb = [&](std::uint64_t v) {
        state = h ^ (v + 0x632BE59BD9B4E019ULL);
        h = splitmix64(state);
    };
    absorb(static_cast<std::uint64_t>(tag));
    for (auto k : keys) {
        absorb(k);
    }
    return h;
}

/// xoshiro256** seeded through splitmix64. Own implementation rather than
/// <random> engines + distributions, whose outputs differ across standard
/// libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto &w : s_) {
            w = splitmix64(sm);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        // Lemire's multiply-shift with rejection.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

   private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace dds
