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

#include <cmath>
#include <utility>

namespace delcom::kernels::serial {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t keep_offset(std::size_t row, std::span<const std::uint64_t> keep) {
    std::uint64_t offset = 0;
    const std::size_t k = keep.size();
    for (std::size_t b = 0; b < k; ++b) {
        if ((row >> (k - 1 - b)) & 1U) {
            offset |= keep[b];
        }
    }
    return offset;
}
} // namespace

void apply_matrix(std::span<Amplitude> amps, std::uint64_t target,
                  const Matrix2 &m) {
    const std::size_t pairs = amps.size() / 2;
    for (std::size_t p = 0; p < pairs; ++p) {
        const std::uint64_t lo = pair_low(p, target);
        const std::uint64_t hi = lo | target;
        const Amplitude a = amps[lo];
        const Amplitude b = amps[hi];
        amps[lo] = m[0] * a + m[1] * b;
        amps[hi] = m[2] * a + m[3] * b;
    }
}

void hadamard(std::span<Amplitude> amps, std::uint64_t target) {
    const std::size_t pairs = amps.size() / 2;
    for (std::size_t p = 0; p < pairs; ++p) {
        const std::uint64_t lo = pair_low(p, target);
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
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (x & target) {
            amps[x] = -amps[x];
        }
    }
}

void controlled_x(std::span<Amplitude> amps, std::uint64_t controls,
                  std::uint64_t target) {
    const std::size_t pairs = amps.size() / 2;
    for (std::size_t p = 0; p < pairs; ++p) {
        const std::uint64_t lo = pair_low(p, target);
        if ((lo & controls) == controls) {
            std::swap(amps[lo], amps[lo | target]);
        }
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    double sum = 0.0;
    for (const auto &a : amps) {
        sum += std::norm(a);
    }
    return sum;
}

double probability_one(std::span<const Amplitude> amps, std::uint64_t target) {
    double sum = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (x & target) {
            sum += std::norm(amps[x]);
        }
    }
    return sum;
}

void collapse(std::span<Amplitude> amps, std::uint64_t target, bool outcome,
              double scale) {
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (((x & target) != 0) == outcome) {
            amps[x] *= scale;
        } else {
            amps[x] = 0.0;
        }
    }
}

std::vector<Amplitude> partial_trace(std::span<const Amplitude> amps,
                                     std::span<const std::uint64_t> keep) {
    const std::size_t dim = std::size_t{1} << keep.size();
    std::uint64_t keep_all = 0;
    for (auto m : keep) {
        keep_all |= m;
    }
    std::vector<std::uint64_t> offsets(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        offsets[r] = keep_offset(r, keep);
    }

    std::vector<Amplitude> rho(dim * dim);
    for (std::size_t env = 0; env < amps.size(); ++env) {
        if (env & keep_all) {
            continue;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            const Amplitude a = amps[env | offsets[r]];
            for (std::size_t c = 0; c < dim; ++c) {
                rho[r * dim + c] += a * std::conj(amps[env | offsets[c]]);
            }
        }
    }
    return rho;
}

} // namespace delcom::kernels::serial
