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
// Serial reference vs OpenMP kernels on random registers.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "delcom/kernels.hpp"

namespace {

using delcom::kernels::Amplitude;

std::vector<Amplitude> random_amplitudes(std::size_t qubits) {
    std::mt19937_64 rng(qubits);
    std::normal_distribution<double> g;
    std::vector<Amplitude> v(std::size_t{1} << qubits);
    for (auto &a : v) {
        a = {g(rng), g(rng)};
    }
    return v;
}

template <void (*Kernel)(std::span<Amplitude>, std::uint64_t)>
void BM_single(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(qubits);
    const std::uint64_t target = std::uint64_t{1} << (qubits / 2);
    for (auto _ : state) {
        Kernel(amps, target);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <void (*Kernel)(std::span<Amplitude>, std::uint64_t, std::uint64_t)>
void BM_toffoli(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(qubits);
    for (auto _ : state) {
        Kernel(amps, 0b11, std::uint64_t{1} << (qubits - 1));
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <double (*Kernel)(std::span<const Amplitude>, std::uint64_t)>
void BM_probability(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    const auto amps = random_amplitudes(qubits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(amps, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <std::vector<Amplitude> (*Kernel)(std::span<const Amplitude>,
                                           std::span<const std::uint64_t>)>
void BM_partial_trace(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    const auto amps = random_amplitudes(qubits);
    const std::vector<std::uint64_t> keep = {1, 4, 16, 64};
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(amps, keep));
    }
}

namespace k = delcom::kernels;

BENCHMARK(BM_single<k::serial::hadamard>)->Name("hadamard/serial")->DenseRange(14, 22, 4);
BENCHMARK(BM_single<k::omp::hadamard>)->Name("hadamard/omp")->DenseRange(14, 22, 4);
BENCHMARK(BM_toffoli<k::serial::controlled_x>)->Name("toffoli/serial")->DenseRange(14, 22, 4);
BENCHMARK(BM_toffoli<k::omp::controlled_x>)->Name("toffoli/omp")->DenseRange(14, 22, 4);
BENCHMARK(BM_probability<k::serial::probability_one>)->Name("probability/serial")->DenseRange(14, 22, 4);
BENCHMARK(BM_probability<k::omp::probability_one>)->Name("probability/omp")->DenseRange(14, 22, 4);
BENCHMARK(BM_partial_trace<k::serial::partial_trace>)->Name("partial_trace/serial")->DenseRange(14, 18, 4);
BENCHMARK(BM_partial_trace<k::omp::partial_trace>)->Name("partial_trace/omp")->DenseRange(14, 18, 4);

} // namespace

BENCHMARK_MAIN();
