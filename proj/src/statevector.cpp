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
#include "delcom/statevector.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace delcom {

namespace {
void require_distinct(std::initializer_list<QubitIndex> qs) {
    for (auto i = qs.begin(); i != qs.end(); ++i) {
        for (auto j = std::next(i); j != qs.end(); ++j) {
            if (*i == *j) {
                throw std::invalid_argument("gate wires must be distinct (qubit " +
                                            std::to_string(i->value) + " repeated)");
            }
        }
    }
}
} // namespace

StateVector::StateVector(std::size_t num_qubits)
    : StateVector(num_qubits, {}) {
    amps_.assign(std::size_t{1} << num_qubits_, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("register width must be in 1.." +
                                    std::to_string(kMaxQubits) + ", got " +
                                    std::to_string(num_qubits_));
    }
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) {
        throw std::out_of_range("basis index " + std::to_string(index) +
                                " out of range for " + std::to_string(num_qubits) +
                                " qubits");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < len) {
        ++n;
    }
    StateVector s(n, std::move(amplitudes));
    if (std::abs(s.norm() - 1.0) > kCircuitTol) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
}

std::uint64_t StateVector::mask(QubitIndex q) const {
    check(q);
    return std::uint64_t{1} << (num_qubits_ - 1 - q.value);
}

void StateVector::check(QubitIndex q) const {
    if (q.value >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q.value) +
                                " out of range for " +
                                std::to_string(num_qubits_) + " qubits");
    }
}

StateVector &StateVector::hadamard(QubitIndex q) {
    kernels::omp::hadamard(amps_, mask(q));
    return *this;
}

StateVector &StateVector::pauli_x(QubitIndex q) {
    kernels::omp::pauli_x(amps_, mask(q));
    return *this;
}

StateVector &StateVector::pauli_z(QubitIndex q) {
    kernels::omp::pauli_z(amps_, mask(q));
    return *this;
}

StateVector &StateVector::apply(QubitIndex q, const Matrix2 &u) {
    kernels::omp::apply_matrix(amps_, mask(q), u);
    return *this;
}

StateVector &StateVector::cnot(QubitIndex control, QubitIndex target) {
    require_distinct({control, target});
    kernels::omp::controlled_x(amps_, mask(control), mask(target));
    return *this;
}

StateVector &StateVector::toffoli(QubitIndex c1, QubitIndex c2, QubitIndex target) {
    require_distinct({c1, c2, target});
    kernels::omp::controlled_x(amps_, mask(c1) | mask(c2), mask(target));
    return *this;
}

StateVector &StateVector::controlled_swap(QubitIndex control, QubitIndex a,
                                          QubitIndex b) {
    require_distinct({control, a, b});
    toffoli(control, a, b);
    toffoli(control, b, a);
    toffoli(control, a, b);
    return *this;
}

double StateVector::probability_one(QubitIndex q) const {
    return kernels::omp::probability_one(amps_, mask(q));
}

int StateVector::measure(QubitIndex q, std::mt19937_64 &rng) {
    const double p1 = std::clamp(probability_one(q), 0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const bool outcome = uniform(rng) < p1;
    const double p = outcome ? p1 : 1.0 - p1;
    assert(p > 0.0 && "collapsed onto a zero-probability branch");
    kernels::omp::collapse(amps_, mask(q), outcome, 1.0 / std::sqrt(p));
    return outcome ? 1 : 0;
}

double StateVector::norm() const {
    return std::sqrt(kernels::omp::norm_squared(amps_));
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of registers with different widths");
    }
    Amplitude sum{0.0, 0.0};
    for (std::size_t x = 0; x < a.size(); ++x) {
        sum += std::conj(a[x]) * b[x];
    }
    return sum;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Amplitude> amps(a.size() * b.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            amps[x * b.size() + y] = a[x] * b[y];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("comparing registers with different widths");
    }
    double worst = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x) {
        worst = std::max(worst, std::abs(a[x] - b[x]));
    }
    return worst;
}

Matrix2 preparation_unitary(Amplitude alpha, Amplitude beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kCircuitTol) {
        throw std::invalid_argument("single-qubit state is not normalized");
    }
    return {alpha, -std::conj(beta), beta, std::conj(alpha)};
}

} // namespace delcom
