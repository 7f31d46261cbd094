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
 * Dense state vector over a register of labeled qubits.
 *
 * Qubit 0 is the leftmost symbol of a ket, i.e. the most significant bit of
 * the basis index: in a 4-qubit register |0101> is index 5.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "delcom/kernels.hpp"

namespace delcom {

using Amplitude = std::complex<double>;
using kernels::Matrix2;

/// Wire label inside a register.
struct QubitIndex {
    std::size_t value;

    constexpr explicit QubitIndex(std::size_t v) noexcept : value(v) {}
    friend constexpr bool operator==(QubitIndex, QubitIndex) = default;
    friend constexpr auto operator<=>(QubitIndex, QubitIndex) = default;
};

namespace literals {
constexpr QubitIndex operator""_q(unsigned long long v) noexcept {
    return QubitIndex{static_cast<std::size_t>(v)};
}
} // namespace literals

/// Tolerance for algebraic identities (single gates, exact formulas).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for properties of accumulated circuits.
inline constexpr double kCircuitTol = 1e-10;

class StateVector {
  public:
    static constexpr std::size_t kMaxQubits = 24;

    /// |0...0> on `num_qubits` wires.
    explicit StateVector(std::size_t num_qubits);

    /// Computational basis state |index>.
    static StateVector basis(std::size_t num_qubits, std::uint64_t index);

    /// Takes ownership of an amplitude array. Length must be a power of two
    /// and the norm 1 within kCircuitTol.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Amplitude operator[](std::uint64_t index) const {
        return amps_[index];
    }

    /// Basis-index bit that carries qubit q.
    [[nodiscard]] std::uint64_t mask(QubitIndex q) const;

    StateVector &hadamard(QubitIndex q);
    StateVector &pauli_x(QubitIndex q);
    StateVector &pauli_z(QubitIndex q);
    /// Arbitrary single-qubit unitary; used to prepare payload qubits.
    StateVector &apply(QubitIndex q, const Matrix2 &u);
    StateVector &cnot(QubitIndex control, QubitIndex target);
    StateVector &toffoli(QubitIndex c1, QubitIndex c2, QubitIndex target);
    /// Swap wires a and b where control is 1, as three Toffolis.
    StateVector &controlled_swap(QubitIndex control, QubitIndex a, QubitIndex b);

    [[nodiscard]] double probability_one(QubitIndex q) const;

    /// Born-rule measurement; collapses and renormalizes in place.
    int measure(QubitIndex q, std::mt19937_64 &rng);

    [[nodiscard]] double norm() const;

  private:
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps);

    void check(QubitIndex q) const;

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// <a|b>, conjugate-linear in a.
[[nodiscard]] Amplitude inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2; insensitive to global phase.
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

/// a (x) b; the qubits of `a` come first.
[[nodiscard]] StateVector tensor(const StateVector &a, const StateVector &b);

/// Largest |a[x] - b[x]| over the basis.
[[nodiscard]] double max_abs_diff(const StateVector &a, const StateVector &b);

/// Unitary with U|0> = alpha|0> + beta|1>. Input must be normalized.
[[nodiscard]] Matrix2 preparation_unitary(Amplitude alpha, Amplitude beta);

} // namespace delcom
