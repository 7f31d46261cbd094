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
 * Reduced density matrices, used to check what a receiver can learn from the
 * qubits it already holds.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "delcom/statevector.hpp"

namespace delcom {

class DensityMatrix {
  public:
    /// Takes a row-major dim x dim array, dim = 2^num_qubits.
    DensityMatrix(std::size_t num_qubits, std::vector<Amplitude> entries);

    /// |psi><psi|
    static DensityMatrix from_pure(const StateVector &psi);

    /// I / 2^num_qubits
    static DensityMatrix maximally_mixed(std::size_t num_qubits);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Amplitude operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] std::span<const Amplitude> entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] Amplitude trace() const;
    /// max |rho - rho^dagger| entrywise.
    [[nodiscard]] double hermiticity_error() const;
    /// Ascending eigenvalues of the Hermitian part.
    [[nodiscard]] std::vector<double> eigenvalues() const;

  private:
    std::size_t num_qubits_;
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

/// Reduced state over `keep`; keep[0] becomes qubit 0 of the result.
/// Throws if keep is empty, has duplicates, or names a missing wire.
[[nodiscard]] DensityMatrix partial_trace(const StateVector &state,
                                          std::span<const QubitIndex> keep);

/// (1/2) * sum |eig(a - b)|
[[nodiscard]] double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

[[nodiscard]] double max_abs_diff(const DensityMatrix &a, const DensityMatrix &b);

} // namespace delcom
