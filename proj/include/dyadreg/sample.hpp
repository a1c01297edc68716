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

#ifndef DYADREG_SAMPLE_HPP
#define DYADREG_SAMPLE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace dyadreg {

// Ordered list of observations on the real line. The element index is the
// observation id; it never changes across transforms or regularization.
struct Sample {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }

    // Permutation p with values[p[0]] <= values[p[1]] <= ... (stable).
    std::vector<std::size_t> sorted_view() const {
        std::vector<std::size_t> idx(values.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) {
                             return values[a] < values[b];
                         });
        return idx;
    }

    std::vector<double> sorted_values() const {
        std::vector<double> v(values);
        std::sort(v.begin(), v.end());
        return v;
    }
};

// Sample carried to [0,1] by the (distributional) probability transform.
// provenance[i] is the index of the originating observation; the transform
// is pointwise, so it is the identity, but it is kept explicit so that
// reordering consumers cannot lose track of observation ids.
struct UniformizedSample {
    std::vector<double> values;
    std::vector<std::size_t> provenance;

    std::size_t size() const { return values.size(); }

    static UniformizedSample from_values(std::vector<double> v) {
        UniformizedSample u;
        u.provenance.resize(v.size());
        std::iota(u.provenance.begin(), u.provenance.end(), std::size_t{0});
        u.values = std::move(v);
        return u;
    }
};

} // namespace dyadreg

#endif // DYADREG_SAMPLE_HPP
