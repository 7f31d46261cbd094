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
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "delcom/statevector.hpp"

namespace delcom::test {

inline StateVector random_state(std::size_t qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

/// Dense square matrix, row-major.
struct DenseMatrix {
    std::size_t dim;
    std::vector<Amplitude> e;

    Amplitude &operator()(std::size_t r, std::size_t c) { return e[r * dim + c]; }
    Amplitude operator()(std::size_t r, std::size_t c) const { return e[r * dim + c]; }
};

inline DenseMatrix identity(std::size_t dim) {
    DenseMatrix m{dim, std::vector<Amplitude>(dim * dim)};
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

inline DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix m{a.dim * b.dim, std::vector<Amplitude>(a.dim * b.dim * a.dim * b.dim)};
    for (std::size_t r1 = 0; r1 < a.dim; ++r1)
        for (std::size_t c1 = 0; c1 < a.dim; ++c1)
            for (std::size_t r2 = 0; r2 < b.dim; ++r2)
                for (std::size_t c2 = 0; c2 < b.dim; ++c2)
                    m(r1 * b.dim + r2, c1 * b.dim + c2) = a(r1, c1) * b(r2, c2);
    return m;
}

/// 1 x ... x u (on wire q) x ... x 1, wire 0 leftmost.
inline DenseMatrix embed_single(std::size_t qubits, std::size_t q, const DenseMatrix &u) {
    DenseMatrix m = q == 0 ? u : identity(2);
    for (std::size_t w = 1; w < qubits; ++w) {
        m = kron(m, w == q ? u : identity(2));
    }
    return m;
}

/// Permutation matrix |f(x)><x| for a map on basis labels given as bit vectors
/// (bit[0] = wire 0).
template <class F> DenseMatrix permutation_matrix(std::size_t qubits, F &&f) {
    const std::size_t dim = std::size_t{1} << qubits;
    DenseMatrix m{dim, std::vector<Amplitude>(dim * dim)};
    for (std::size_t x = 0; x < dim; ++x) {
        std::vector<int> bits(qubits);
        for (std::size_t w = 0; w < qubits; ++w) {
            bits[w] = static_cast<int>((x >> (qubits - 1 - w)) & 1U);
        }
        f(bits);
        std::size_t y = 0;
        for (std::size_t w = 0; w < qubits; ++w) {
            y = (y << 1) | static_cast<std::size_t>(bits[w]);
        }
        m(y, x) = 1.0;
    }
    return m;
}

inline std::vector<Amplitude> multiply(const DenseMatrix &m, const StateVector &s) {
    std::vector<Amplitude> out(m.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c)
            out[r] += m(r, c) * s[c];
    return out;
}

inline double max_diff(const std::vector<Amplitude> &a, const StateVector &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline const DenseMatrix &hadamard_matrix() {
    static const DenseMatrix h{2, {M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2}};
    return h;
}

} // namespace delcom::test
