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
#include "delcom/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace delcom {

namespace {
Eigen::MatrixXcd to_eigen(const DensityMatrix &rho) {
    const auto n = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = rho(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    return m;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &m) {
    const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}
} // namespace

DensityMatrix::DensityMatrix(std::size_t num_qubits, std::vector<Amplitude> entries)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits),
      entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("density matrix needs " +
                                    std::to_string(dim_ * dim_) + " entries");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    const std::size_t dim = psi.size();
    std::vector<Amplitude> e(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            e[r * dim + c] = psi[r] * std::conj(psi[c]);
        }
    }
    return {psi.num_qubits(), std::move(e)};
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Amplitude> e(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        e[r * dim + r] = 1.0 / static_cast<double>(dim);
    }
    return {num_qubits, std::move(e)};
}

Amplitude DensityMatrix::trace() const {
    Amplitude t{0.0, 0.0};
    for (std::size_t r = 0; r < dim_; ++r) {
        t += (*this)(r, r);
    }
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

std::vector<double> DensityMatrix::eigenvalues() const {
    return hermitian_eigenvalues(to_eigen(*this));
}

DensityMatrix partial_trace(const StateVector &state, std::span<const QubitIndex> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial trace needs at least one kept qubit");
    }
    std::vector<std::uint64_t> masks;
    masks.reserve(keep.size());
    for (auto q : keep) {
        const std::uint64_t m = state.mask(q);
        if (std::find(masks.begin(), masks.end(), m) != masks.end()) {
            throw std::invalid_argument("qubit " + std::to_string(q.value) +
                                        " listed twice in partial trace");
        }
        masks.push_back(m);
    }
    return {keep.size(), kernels::omp::partial_trace(state.amplitudes(), masks)};
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("trace distance of mismatched dimensions");
    }
    const auto ev = hermitian_eigenvalues(to_eigen(a) - to_eigen(b));
    double sum = 0.0;
    for (double v : ev) {
        sum += std::abs(v);
    }
    return 0.5 * sum;
}

double max_abs_diff(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("comparing mismatched density matrices");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

} // namespace delcom
