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

#ifndef DYADREG_DYADIC_HPP
#define DYADREG_DYADIC_HPP

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyadreg {

// Dyadic subinterval of [0,1]: [index/2^level, (index+1)/2^level).
// Convention used throughout: intervals are half-open on the right, except
// that an interval whose right endpoint is exactly 1 also contains 1.
// Endpoints are exact in binary floating point for level <= 50.
struct DyadicInterval {
    int level = 0;            // j >= 0
    std::int64_t index = 0;   // i in [0, 2^j)

    double lo() const { return std::ldexp(static_cast<double>(index), -level); }
    double hi() const {
        return std::ldexp(static_cast<double>(index + 1), -level);
    }
    double length() const { return std::ldexp(1.0, -level); }
    double midpoint() const {
        return std::ldexp(static_cast<double>(2 * index + 1), -(level + 1));
    }

    bool ends_at_one() const { return index + 1 == (std::int64_t{1} << level); }

    bool contains(double x) const {
        if (x < lo()) return false;
        if (x < hi()) return true;
        return ends_at_one() && x == 1.0;
    }

    DyadicInterval left_child() const { return {level + 1, 2 * index}; }
    DyadicInterval right_child() const { return {level + 1, 2 * index + 1}; }
    DyadicInterval parent() const { return {level - 1, index / 2}; }

    // Heap-style numbering, unique over all nodes; used as an RNG key.
    std::uint64_t node_id() const {
        return (std::uint64_t{1} << level) + static_cast<std::uint64_t>(index);
    }

    friend auto operator<=>(const DyadicInterval&,
                            const DyadicInterval&) = default;

    std::string to_string() const {
        return "[" + std::to_string(index) + "/2^" + std::to_string(level) +
               ")";
    }
};

// The uniform reference grid k/n, k = 0..n-1, kept implicit: counts are
// computed arithmetically, never by materializing the points.
//
// Grid positions, where a concrete coordinate is needed (the local
// discrepancy sweep), are the IEEE doubles nearest to k/n. Distinct k give
// distinct doubles, and a rounded grid point can never cross a dyadic
// boundary as long as n * 2^level < 2^52, which every caller in this
// project satisfies by a wide margin.
struct GridSpec {
    std::int64_t n = 0;

    explicit GridSpec(std::int64_t n_) : n(n_) {
        if (n <= 0) throw std::invalid_argument("GridSpec: n must be >= 1");
    }

    double position(std::int64_t k) const {
        return static_cast<double>(k) / static_cast<double>(n);
    }

    // #{k in [0,n) : k/n < index/2^level}, exact integer arithmetic.
    std::int64_t count_below_boundary(int level, std::int64_t index) const {
        check_depth(level);
        // k/n < i/2^j  <=>  k * 2^j < i * n  <=>  k < i*n / 2^j.
        const std::int64_t num = index * n;
        const std::int64_t q = (num + (std::int64_t{1} << level) - 1) >> level;
        return q > n ? n : q;
    }

    // Number of grid points inside a dyadic interval (right-closure at 1 is
    // immaterial: the largest grid point is (n-1)/n < 1).
    std::int64_t count_in(const DyadicInterval& iv) const {
        return count_below_boundary(iv.level, iv.index + 1) -
               count_below_boundary(iv.level, iv.index);
    }

    // Largest k in [0,n) with position(k) <= x, or -1 if none.
    // Floating-point guess plus a monotone adjustment, so the answer is
    // exact with respect to the rounded positions in O(1) probes.
    std::int64_t last_le(double x) const {
        if (x < 0.0) return -1;
        std::int64_t k =
            static_cast<std::int64_t>(x * static_cast<double>(n));
        if (k > n - 1) k = n - 1;
        if (k < 0) k = 0;
        while (k >= 0 && position(k) > x) --k;
        while (k + 1 <= n - 1 && position(k + 1) <= x) ++k;
        return k;
    }

    // Largest k in [0,n) with position(k) < x, or -1 if none.
    std::int64_t last_lt(double x) const {
        std::int64_t k = last_le(x);
        while (k >= 0 && position(k) == x) --k;
        return k;
    }

private:
    void check_depth(int level) const {
        if (level < 0 || level >= 62 ||
            level + std::bit_width(static_cast<std::uint64_t>(n)) > 52) {
            throw std::logic_error(
                "GridSpec: level too deep for exact grid counts (n=" +
                std::to_string(n) + ", level=" + std::to_string(level) + ")");
        }
    }
};

} // namespace dyadreg

#endif // DYADREG_DYADIC_HPP
