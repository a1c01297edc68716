// Copyright 2026 dyadreg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYADREG_RNG_HPP
#define DYADREG_RNG_HPP

#include <cstdint>

namespace dyadreg {

// SplitMix64 output function (Steele/Lea/Flood; Vigna's fixed-increment
// variant). Used both as the stream generator and as the keyed mixing
// function for deriving independent sub-streams.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ULL;

// Single-owner random stream. Sub-streams for parallel or replayable work
// are obtained by key derivation, never by sharing: two streams derived
// with different keys are independent for all practical purposes.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kSplitmixGamma;
        return splitmix64_mix(state_);
    }

    // Uniform in the open interval (0,1). 53-bit resolution, zero rejected.
    double next_unit_open() {
        for (;;) {
            const double u =
                static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

    // Uniform strictly inside (a,b). Endpoint hits from rounding are
    // rejected, so the result never coincides with a or b.
    double uniform_open(double a, double b) {
        for (;;) {
            const double x = a + next_unit_open() * (b - a);
            if (x > a && x < b) return x;
        }
    }

    // Unbiased integer in [0, bound), bound >= 1. Lemire's method.
    std::uint64_t uniform_below(std::uint64_t bound) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

// Keyed derivation: folds up to three keys into the master seed through the
// SplitMix64 finalizer. Streams derived with distinct key tuples never
// overlap, which is what makes per-node randomness replayable and makes the
// coupled two-algorithm runs see literally the same draws at shared nodes.
inline RngStream derive_stream(std::uint64_t seed, std::uint64_t k0,
                               std::uint64_t k1 = 0, std::uint64_t k2 = 0) {
    std::uint64_t s = splitmix64_mix(seed + kSplitmixGamma);
    s = splitmix64_mix(s ^ splitmix64_mix(k0 + 0x8BADF00D5DEECE66ULL));
    s = splitmix64_mix(s ^ splitmix64_mix(k1 + 0xC0FFEE123456789BULL));
    s = splitmix64_mix(s ^ splitmix64_mix(k2 + 0x5DEECE66D0000001ULL));
    return RngStream(s);
}

// Fixed purpose tags so independent consumers of one master seed can never
// collide on a derived stream.
namespace stream_tag {
inline constexpr std::uint64_t kNode = 1;        // per dyadic node
inline constexpr std::uint64_t kUniformize = 2;  // distributional transform
inline constexpr std::uint64_t kSample = 3;      // i.i.d. sample generation
inline constexpr std::uint64_t kTrial = 4;       // experiment trials
} // namespace stream_tag

} // namespace dyadreg

#endif // DYADREG_RNG_HPP
