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
 * Gate-level simulation of the delayed-commutation switch.
 *
 * Every input port owns a register of d transmitted and d retained ancilla
 * qubits prepared in the code's ancilla state. A packet is cut into blocks of
 * n = 2d data qubits; block b occupies slots b*n+1 .. b*n+n.
 *
 *   slot b*n       prepare ancillae
 *   slot b*n+s     data qubit s arrives on every line
 *                  s <= d : transmitted qubit s leaves towards its port
 *                  s >  d : route data qubits m and d+m (m = s-d) through the
 *                           permutation network, fold them into retained qubit
 *                           m as a phase flip and a bit flip, send it
 *   slot b*n+n     destinations undo the code and measure
 *
 * The routing decision is not available before slot b*n+d+1, and nothing
 * that depends on it ever touches a qubit that has already left.
 */
#pragma once

#include <cstddef>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delcom/benes.hpp"
#include "delcom/codec.hpp"
#include "delcom/density_matrix.hpp"
#include "delcom/statevector.hpp"

namespace delcom::switching {

struct QubitState {
    Amplitude alpha{1.0, 0.0};
    Amplitude beta{0.0, 0.0};

    static QubitState bit(bool one) {
        return one ? QubitState{0.0, 1.0} : QubitState{1.0, 0.0};
    }
    [[nodiscard]] bool is_basis() const;
};

enum class PayloadMode { classical, quantum };

/// Time-ordered qubits emitted by one source or received by one destination.
struct PortStream {
    PayloadMode mode = PayloadMode::classical;
    std::vector<QubitState> qubits;

    static PortStream from_bits(std::string_view bits);
    static PortStream prepared(std::vector<QubitState> qubits);

    [[nodiscard]] std::size_t size() const noexcept { return qubits.size(); }
    /// Classical payload as a '0'/'1' string.
    [[nodiscard]] std::string bits() const;
};

struct SwitchInstance {
    std::size_t num_ports = 2;
    codec::CodeParams params{2};
    /// routing[source] = destination port.
    benes::Permutation routing{0, 1};
};

/// Destinations requested by each source's header. Two sources asking for the
/// same port raise ContentionError; out-of-range ports std::invalid_argument.
[[nodiscard]] benes::Permutation routing_from_requests(
    std::span<const std::size_t> requested);

/// 2x2 commutation bit: 0 keeps S_i -> D_i, 1 crosses.
[[nodiscard]] benes::Permutation routing_from_control(bool commute);

struct TranscriptEntry {
    std::size_t block = 0;
    std::size_t slot = 0;
    std::string site;
    std::string gate;
    std::vector<std::string> wires;
    bool control_dependent = false;
};

class Transcript {
  public:
    void add(TranscriptEntry entry) { entries_.push_back(std::move(entry)); }
    [[nodiscard]] const std::vector<TranscriptEntry> &entries() const noexcept {
        return entries_;
    }

    /// Header `block,slot,site,gate,wires,control_dependent`; wires are
    /// separated by ';'.
    void write_csv(std::ostream &out) const;

  private:
    std::vector<TranscriptEntry> entries_;
};

/// One line per problem found: a routing-dependent gate on a qubit already
/// sent, or any switch gate on a qubit after it was sent. Empty when clean.
[[nodiscard]] std::vector<std::string> delayed_action_violations(
    const Transcript &transcript, codec::CodeParams params);

struct SwitchResult {
    std::vector<PortStream> outputs;
    Transcript transcript;
};

/// Registers wider than this many qubits are rejected.
[[nodiscard]] std::size_t register_width(const SwitchInstance &instance);

/// Runs every block of the packet through the switch and decodes at the
/// destinations. Classical payloads have the switch-side data qubits measured
/// after encoding; prepared payloads keep them unmeasured.
[[nodiscard]] SwitchResult run_switch(const SwitchInstance &instance,
                                      std::span<const PortStream> inputs,
                                      std::mt19937_64 &rng);

[[nodiscard]] SwitchResult run_switch_2x2(std::span<const PortStream> inputs,
                                          bool commute, codec::CodeParams params,
                                          std::mt19937_64 &rng);

struct ProbeResult {
    /// Reduced state of the qubits already sent to each destination.
    std::vector<DensityMatrix> per_destination;
    /// Reduced state of everything already sent.
    DensityMatrix joint;
};

/// Reduced states at the end of `slot` in block 0. Requires 1 <= slot <= d;
/// later slots come after the routing decision and throw.
[[nodiscard]] ProbeResult no_signaling_probe(const SwitchInstance &instance,
                                             std::span<const PortStream> inputs,
                                             std::size_t slot);

/// Repeats run_switch `trials` times, trial t seeded from {seed, t}. Returns
/// the destination bit strings per trial. Trials run in parallel.
[[nodiscard]] std::vector<std::vector<std::string>> sample_destinations(
    const SwitchInstance &instance, std::span<const PortStream> inputs,
    std::size_t trials, std::uint64_t seed);

} // namespace delcom::switching
