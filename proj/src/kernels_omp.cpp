// Copyright 2026 The delcom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "delcom/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include <omp.h>

namespace delcom::kernels::omp {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

using Index = std::int64_t;

bool parallel(std::size_t work) { return work >= kParallelThreshold; }

/// Sum of f(x) over [0, n) with chunk partials combined in chunk order.
template <class F> double chunked_sum(std::size_t n, F &&f) {
    const std::size_t chunks = (n + kReductionChunk - 1) / kReductionChunk;
    std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static) if (parallel(n))
    for (Index c = 0; c < static_cast<Index>(chunks); ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t end = std::min(n, begin + kReductionChunk);
        double s = 0.0;
        for (std::size_t x = begin; x < end; ++x) {
            s += f(x);
        }
        partial[static_cast<std::size_t>(c)] = s;
    }
    double total = 0.0;
    for (double s : partial) {
        total += s;
    }
    return total;
}
} // namespace

void apply_matrix(std::span<Amplitude> amps, std::uint64_t target,
                  const Matrix2 &m) {
    const std::size_t pairs = amps.size() / 2;
#pragma omp parallel for schedule(static) if (parallel(pairs))
    for (Index p = 0; p < static_cast<Index>(pairs); ++p) {
        const std::uint64_t lo = pair_low(static_cast<std::uint64_t>(p), target);
        const std::uint64_t hi = lo | target;
        const Amplitude a = amps[lo];
        const Amplitude b = amps[hi];
        amps[lo] = m[0] * a + m[1] * b;
        amps[hi] = m[2] * a + m[3] * b;
    }
}

void hadamard(std::span<Amplitude> amps, std::uint64_t target) {
    const std::size_t pairs = amps.size() / 2;
#pragma omp parallel for schedule(static) if (parallel(pairs))
    for (Index p = 0; p < static_cast<Index>(pairs); ++p) {
        const std::uint64_t lo = pair_low(static_cast<std::uint64_t>(p), target);
        const std::uint64_t hi = lo | target;
        const Amplitude a = amps[lo];
        const Amplitude b = amps[hi];
        amps[lo] = (a + b) * kInvSqrt2;
        amps[hi] = (a - b) * kInvSqrt2;
    }
}

void pauli_x(std::span<Amplitude> amps, std::uint64_t target) {
    controlled_x(amps, 0, target);
}

void pauli_z(std::span<Amplitude> amps, std::uint64_t target) {
    const std::size_t pairs = amps.size() / 2;
#pragma omp parallel for schedule(static) if (parallel(pairs))
    for (Index p = 0; p < static_cast<Index>(pairs); ++p) {
        const std::uint64_t hi =
            pair_low(static_cast<std::uint64_t>(p), target) | target;
        amps[hi] = -amps[hi];
    }
}

void controlled_x(std::span<Amplitude> amps, std::uint64_t controls,
                  std::uint64_t target) {
    const std::size_t pairs = amps.size() / 2;
#pragma omp parallel for schedule(static) if (parallel(pairs))
    for (Index p = 0; p < static_cast<Index>(pairs); ++p) {
        const std::uint64_t lo = pair_low(static_cast<std::uint64_t>(p), target);
        if ((lo & controls) == controls) {
            std::swap(amps[lo], amps[lo | target]);
        }
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    return chunked_sum(amps.size(),
                       [&](std::size_t x) { return std::norm(amps[x]); });
}

double probability_one(std::span<const Amplitude> amps, std::uint64_t target) {
    return chunked_sum(amps.size(), [&](std::size_t x) {
        return (x & target) ? std::norm(amps[x]) : 0.0;
    });
}

void collapse(std::span<Amplitude> amps, std::uint64_t target, bool outcome,
              double scale) {
#pragma omp parallel for schedule(static) if (parallel(amps.size()))
    for (Index i = 0; i < static_cast<Index>(amps.size()); ++i) {
        const auto x = static_cast<std::size_t>(i);
        if (((x & target) != 0) == outcome) {
            amps[x] *= scale;
        } else {
            amps[x] = 0.0;
        }
    }
}

std::vector<Amplitude> partial_trace(std::span<const Amplitude> amps,
                                     std::span<const std::uint64_t> keep) {
    const std::size_t k = keep.size();
    const std::size_t dim = std::size_t{1} << k;
    std::uint64_t keep_all = 0;
    for (auto m : keep) {
        keep_all |= m;
    }
    std::vector<std::uint64_t> offsets(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t b = 0; b < k; ++b) {
            if ((r >> (k - 1 - b)) & 1U) {
                offsets[r] |= keep[b];
            }
        }
    }

    // Rows are independent; each entry accumulates in ascending environment
    // order, which matches the serial kernel term for term.
    std::vector<Amplitude> rho(dim * dim);
#pragma omp parallel for schedule(dynamic) if (parallel(amps.size() * dim))
    for (Index r = 0; r < static_cast<Index>(dim); ++r) {
        const auto row = static_cast<std::size_t>(r);
        for (std::size_t env = 0; env < amps.size(); ++env) {
            if (env & keep_all) {
                continue;
            }
            const Amplitude a = amps[env | offsets[row]];
            for (std::size_t c = 0; c < dim; ++c) {
                rho[row * dim + c] += a * std::conj(amps[env | offsets[c]]);
            }
        }
    }
    return rho;
}

} // namespace delcom::kernels::omp
