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
/**
 * @file
 * Amplitude-array kernels for dense state vectors.
 *
 * Every kernel exists twice: `serial` is the straightforward reference loop
 * and `omp` is the OpenMP version used by StateVector. Both take qubits as
 * single-bit masks into the basis index, so they are independent of the
 * register's labeling convention. Gate kernels in the two namespaces produce
 * bitwise identical output; reductions in `omp` use fixed-size chunks so
 * their result does not depend on the thread count.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace delcom::kernels {

using Amplitude = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

/// Below this many amplitude pairs the OpenMP kernels stay single-threaded.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Chunk length for deterministic reductions.
inline constexpr std::size_t kReductionChunk = std::size_t{1} << 12;

namespace serial {

void apply_matrix(std::span<Amplitude> amps, std::uint64_t target,
                  const Matrix2 &m);
void hadamard(std::span<Amplitude> amps, std::uint64_t target);
void pauli_x(std::span<Amplitude> amps, std::uint64_t target);
void pauli_z(std::span<Amplitude> amps, std::uint64_t target);

/// Flip `target` on every basis term where all bits of `controls` are set.
/// Covers CNOT (one control bit) and Toffoli (two).
void controlled_x(std::span<Amplitude> amps, std::uint64_t controls,
                  std::uint64_t target);

double norm_squared(std::span<const Amplitude> amps);
double probability_one(std::span<const Amplitude> amps, std::uint64_t target);

/// Zero the branch where `target` != outcome and multiply the rest by scale.
void collapse(std::span<Amplitude> amps, std::uint64_t target, bool outcome,
              double scale);

/// Reduced density matrix over `keep` (masks, first entry = most significant
/// bit of the reduced index). Output is row-major, 2^k x 2^k.
std::vector<Amplitude> partial_trace(std::span<const Amplitude> amps,
                                     std::span<const std::uint64_t> keep);

} // namespace serial

namespace omp {

void apply_matrix(std::span<Amplitude> amps, std::uint64_t target,
                  const Matrix2 &m);
void hadamard(std::span<Amplitude> amps, std::uint64_t target);
void pauli_x(std::span<Amplitude> amps, std::uint64_t target);
void pauli_z(std::span<Amplitude> amps, std::uint64_t target);
void controlled_x(std::span<Amplitude> amps, std::uint64_t controls,
                  std::uint64_t target);
double norm_squared(std::span<const Amplitude> amps);
double probability_one(std::span<const Amplitude> amps, std::uint64_t target);
void collapse(std::span<Amplitude> amps, std::uint64_t target, bool outcome,
              double scale);
std::vector<Amplitude> partial_trace(std::span<const Amplitude> amps,
                                     std::span<const std::uint64_t> keep);

} // namespace omp

/// Index of the `pair`-th basis term with `target` clear.
[[nodiscard]] constexpr std::uint64_t pair_low(std::uint64_t pair,
                                               std::uint64_t target) noexcept {
    const std::uint64_t below = target - 1;
    return ((pair & ~below) << 1) | (pair & below);
}

} // namespace delcom::kernels
