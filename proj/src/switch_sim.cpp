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
#include "delcom/switch_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "delcom/error.hpp"

namespace delcom::switching {

namespace {

constexpr std::string_view kSwitchSite = "switch";

std::string port_site(char prefix, std::size_t port) {
    return std::string(1, prefix) + std::to_string(port + 1);
}

/// One block of the packet on a fresh register.
class BlockCircuit {
  public:
    BlockCircuit(const SwitchInstance &instance, std::size_t block,
                 Transcript *transcript)
        : inst_(instance), d_(instance.params.d()), n_(instance.params.n()),
          stride_(2 * instance.params.n()), block_(block),
          state_(register_width(instance)), transcript_(transcript) {}

    QubitIndex transmitted(std::size_t port, std::size_t m) const {
        return QubitIndex{port * stride_ + m};
    }
    QubitIndex retained(std::size_t port, std::size_t m) const {
        return QubitIndex{port * stride_ + d_ + m};
    }
    QubitIndex data(std::size_t line, std::size_t pos) const {
        return QubitIndex{line * stride_ + 2 * d_ + pos};
    }
    QubitIndex control() const { return QubitIndex{inst_.num_ports * stride_}; }

    const StateVector &state() const { return state_; }

    /// Runs slots 0..last_slot of this block; `inputs` holds this block's n
    /// qubits per port. Switch-side data qubits are measured at the end when
    /// an rng is given (classical payloads).
    void run(const std::vector<std::vector<QubitState>> &inputs,
             const benes::Network &network, std::size_t last_slot,
             std::mt19937_64 *measure_switch_data) {
        prepare_ancillae();
        for (std::size_t s = 1; s <= std::min(last_slot, n_); ++s) {
            for (std::size_t p = 0; p < inst_.num_ports; ++p) {
                arrive(p, s - 1, inputs[p][s - 1]);
            }
            if (s <= d_) {
                for (std::size_t p = 0; p < inst_.num_ports; ++p) {
                    emit(s, transmitted(p, s - 1));
                }
            } else {
                const std::size_t m = s - d_ - 1;
                route(s, network, {m, d_ + m});
                for (std::size_t p = 0; p < inst_.num_ports; ++p) {
                    encode(s, p, m);
                    emit(s, retained(p, m));
                }
            }
        }
        if (last_slot >= n_ && measure_switch_data != nullptr) {
            for (std::size_t line = 0; line < inst_.num_ports; ++line) {
                for (std::size_t pos = 0; pos < n_; ++pos) {
                    state_.measure(data(line, pos), *measure_switch_data);
                    log(n_, std::string(kSwitchSite), "measure", {data(line, pos)}, false);
                }
            }
        }
    }

    /// Destination-side decoder followed by readout; returns n bits.
    std::string decode_at(std::size_t port, std::mt19937_64 &rng) {
        const std::string site = port_site('D', port);
        for (std::size_t m = 0; m < d_; ++m) {
            state_.cnot(transmitted(port, m), retained(port, m));
            log(n_, site, "cnot", {transmitted(port, m), retained(port, m)}, false);
            state_.hadamard(transmitted(port, m));
            log(n_, site, "h", {transmitted(port, m)}, false);
        }
        std::string bits;
        for (std::size_t m = 0; m < d_; ++m) {
            bits += state_.measure(transmitted(port, m), rng) ? '1' : '0';
            log(n_, site, "measure", {transmitted(port, m)}, false);
        }
        for (std::size_t m = 0; m < d_; ++m) {
            bits += state_.measure(retained(port, m), rng) ? '1' : '0';
            log(n_, site, "measure", {retained(port, m)}, false);
        }
        return bits;
    }

  private:
    std::string name(QubitIndex q) const {
        if (q == control()) {
            return "C";
        }
        const std::size_t port = q.value / stride_;
        const std::size_t local = q.value % stride_;
        const std::string p = std::to_string(port + 1);
        if (local < d_) {
            return "T" + p + "." + std::to_string(local + 1);
        }
        if (local < 2 * d_) {
            return "R" + p + "." + std::to_string(local - d_ + 1);
        }
        return "S" + p + "." + std::to_string(local - 2 * d_ + 1);
    }

    void log(std::size_t slot, std::string site, std::string gate,
             std::initializer_list<QubitIndex> wires, bool control_dependent) {
        if (transcript_ == nullptr) {
            return;
        }
        TranscriptEntry e;
        e.block = block_;
        e.slot = block_ * n_ + slot;
        e.site = std::move(site);
        e.gate = std::move(gate);
        for (auto q : wires) {
            e.wires.push_back(name(q));
        }
        e.control_dependent = control_dependent;
        transcript_->add(std::move(e));
    }

    void gate_h(std::size_t slot, QubitIndex q, bool dep = false) {
        state_.hadamard(q);
        log(slot, std::string(kSwitchSite), "h", {q}, dep);
    }
    void gate_x(std::size_t slot, QubitIndex q, bool dep) {
        state_.pauli_x(q);
        log(slot, std::string(kSwitchSite), "x", {q}, dep);
    }
    void gate_cnot(std::size_t slot, QubitIndex c, QubitIndex t) {
        state_.cnot(c, t);
        log(slot, std::string(kSwitchSite), "cnot", {c, t}, false);
    }
    void gate_toffoli(std::size_t slot, QubitIndex c1, QubitIndex c2, QubitIndex t) {
        state_.toffoli(c1, c2, t);
        log(slot, std::string(kSwitchSite), "toffoli", {c1, c2, t}, true);
    }

    void prepare_ancillae() {
        for (std::size_t p = 0; p < inst_.num_ports; ++p) {
            for (std::size_t m = 0; m < d_; ++m) {
                gate_h(0, transmitted(p, m));
                gate_cnot(0, transmitted(p, m), retained(p, m));
            }
        }
    }

    void arrive(std::size_t port, std::size_t pos, const QubitState &q) {
        const std::string site = port_site('S', port);
        if (q.is_basis()) {
            if (std::abs(q.beta) > 0.5) {
                state_.pauli_x(data(port, pos));
                log(pos + 1, site, "x", {data(port, pos)}, false);
            }
            return;
        }
        state_.apply(data(port, pos), preparation_unitary(q.alpha, q.beta));
        log(pos + 1, site, "prep", {data(port, pos)}, false);
    }

    void emit(std::size_t slot, QubitIndex q) {
        log(slot, std::string(kSwitchSite), "emit", {q}, false);
    }

    /// Pushes the data qubits at `positions` through the exchange network.
    /// The control wire is raised for crossing elements only, so every gate
    /// here is conditioned on the routing decision.
    void route(std::size_t slot, const benes::Network &network,
               std::initializer_list<std::size_t> positions) {
        for (const auto &e : network.elements) {
            if (e.cross) {
                gate_x(slot, control(), true);
            }
            for (std::size_t pos : positions) {
                const QubitIndex a = data(e.upper, pos);
                const QubitIndex b = data(e.lower, pos);
                gate_toffoli(slot, control(), a, b);
                gate_toffoli(slot, control(), b, a);
                gate_toffoli(slot, control(), a, b);
            }
            if (e.cross) {
                gate_x(slot, control(), true);
            }
        }
    }

    /// Phase flip from data qubit m (as H-CNOT-H), bit flip from data qubit d+m.
    void encode(std::size_t slot, std::size_t line, std::size_t m) {
        const QubitIndex r = retained(line, m);
        gate_h(slot, r);
        gate_cnot(slot, data(line, m), r);
        gate_h(slot, r);
        gate_cnot(slot, data(line, d_ + m), r);
    }

    const SwitchInstance &inst_;
    std::size_t d_;
    std::size_t n_;
    std::size_t stride_;
    std::size_t block_;
    StateVector state_;
    Transcript *transcript_;
};

void validate(const SwitchInstance &instance, std::span<const PortStream> inputs) {
    if (instance.routing.size() != instance.num_ports) {
        throw std::invalid_argument("routing must name a destination for every port");
    }
    (void)register_width(instance);
    (void)benes::route(instance.routing);
    if (inputs.size() != instance.num_ports) {
        throw std::invalid_argument("expected " + std::to_string(instance.num_ports) +
                                    " input streams, got " +
                                    std::to_string(inputs.size()));
    }
    const std::size_t len = inputs.front().size();
    const std::size_t n = instance.params.n();
    for (const auto &s : inputs) {
        if (s.size() != len) {
            throw std::invalid_argument("input streams differ in length");
        }
    }
    if (len < n || len % n != 0) {
        throw std::invalid_argument("stream length " + std::to_string(len) +
                                    " must be a positive multiple of the code width " +
                                    std::to_string(n));
    }
}

std::vector<std::vector<QubitState>> block_inputs(std::span<const PortStream> inputs,
                                                  std::size_t block, std::size_t n) {
    std::vector<std::vector<QubitState>> out;
    out.reserve(inputs.size());
    for (const auto &s : inputs) {
        auto first = s.qubits.begin() + static_cast<std::ptrdiff_t>(block * n);
        out.emplace_back(first, first + static_cast<std::ptrdiff_t>(n));
    }
    return out;
}

bool all_classical(std::span<const PortStream> inputs) {
    return std::all_of(inputs.begin(), inputs.end(), [](const PortStream &s) {
        return s.mode == PayloadMode::classical;
    });
}

SwitchResult run_switch_impl(const SwitchInstance &instance,
                             std::span<const PortStream> inputs,
                             std::mt19937_64 &rng, bool record) {
    validate(instance, inputs);
    const benes::Network network = benes::route(instance.routing);
    const std::size_t n = instance.params.n();
    const std::size_t blocks = inputs.front().size() / n;
    const bool classical = all_classical(inputs);

    SwitchResult result;
    result.outputs.resize(instance.num_ports);
    std::vector<std::string> received(instance.num_ports);
    for (std::size_t b = 0; b < blocks; ++b) {
        BlockCircuit circuit(instance, b, record ? &result.transcript : nullptr);
        circuit.run(block_inputs(inputs, b, n), network, n, classical ? &rng : nullptr);
        for (std::size_t p = 0; p < instance.num_ports; ++p) {
            received[p] += circuit.decode_at(p, rng);
        }
    }
    for (std::size_t p = 0; p < instance.num_ports; ++p) {
        result.outputs[p] = PortStream::from_bits(received[p]);
    }
    return result;
}

} // namespace

bool QubitState::is_basis() const {
    return (std::abs(alpha - Amplitude{1.0}) < kExactTol && std::abs(beta) < kExactTol) ||
           (std::abs(alpha) < kExactTol && std::abs(beta - Amplitude{1.0}) < kExactTol);
}

PortStream PortStream::from_bits(std::string_view bits) {
    PortStream s;
    s.mode = PayloadMode::classical;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("payload '" + std::string(bits) +
                                        "' is not a bit string");
        }
        s.qubits.push_back(QubitState::bit(c == '1'));
    }
    return s;
}

PortStream PortStream::prepared(std::vector<QubitState> qubits) {
    for (const auto &q : qubits) {
        (void)preparation_unitary(q.alpha, q.beta);
    }
    return {PayloadMode::quantum, std::move(qubits)};
}

std::string PortStream::bits() const {
    std::string out;
    for (const auto &q : qubits) {
        if (!q.is_basis()) {
            throw std::logic_error("stream holds non-basis qubits");
        }
        out += std::abs(q.beta) > 0.5 ? '1' : '0';
    }
    return out;
}

benes::Permutation routing_from_requests(std::span<const std::size_t> requested) {
    std::vector<int> owner(requested.size(), -1);
    for (std::size_t s = 0; s < requested.size(); ++s) {
        const std::size_t dst = requested[s];
        if (dst >= requested.size()) {
            throw std::invalid_argument("source " + std::to_string(s + 1) +
                                        " requests missing port " +
                                        std::to_string(dst + 1));
        }
        if (owner[dst] >= 0) {
            throw ContentionError("sources " + std::to_string(owner[dst] + 1) +
                                  " and " + std::to_string(s + 1) +
                                  " both request destination " +
                                  std::to_string(dst + 1));
        }
        owner[dst] = static_cast<int>(s);
    }
    return {requested.begin(), requested.end()};
}

benes::Permutation routing_from_control(bool commute) {
    return commute ? benes::Permutation{1, 0} : benes::Permutation{0, 1};
}

void Transcript::write_csv(std::ostream &out) const {
    out << "block,slot,site,gate,wires,control_dependent\n";
    for (const auto &e : entries_) {
        out << e.block << ',' << e.slot << ',' << e.site << ',' << e.gate << ',';
        for (std::size_t i = 0; i < e.wires.size(); ++i) {
            out << (i ? ";" : "") << e.wires[i];
        }
        out << ',' << (e.control_dependent ? 1 : 0) << '\n';
    }
}

std::vector<std::string> delayed_action_violations(const Transcript &transcript,
                                                   codec::CodeParams params) {
    const std::size_t n = params.n();
    const std::size_t d = params.d();
    // (block, wire) -> emission slot
    std::map<std::pair<std::size_t, std::string>, std::size_t> emitted;
    std::set<std::pair<std::size_t, std::string>> early;
    for (const auto &e : transcript.entries()) {
        if (e.gate == "emit" && e.site == kSwitchSite) {
            for (const auto &w : e.wires) {
                emitted[{e.block, w}] = e.slot;
                const std::size_t local = e.slot - e.block * n;
                if (local >= 1 && local <= d) {
                    early.insert({e.block, w});
                }
            }
        }
    }

    std::vector<std::string> problems;
    std::set<std::pair<std::size_t, std::string>> gone;
    for (const auto &e : transcript.entries()) {
        for (const auto &w : e.wires) {
            const std::pair key{e.block, w};
            if (e.control_dependent && early.count(key)) {
                problems.push_back("routing-dependent " + e.gate + " at slot " +
                                   std::to_string(e.slot) + " touches early qubit " + w);
            }
            if (e.site == kSwitchSite && e.gate != "emit" && gone.count(key)) {
                problems.push_back("switch " + e.gate + " at slot " +
                                   std::to_string(e.slot) + " touches sent qubit " + w);
            }
        }
        if (e.gate == "emit" && e.site == kSwitchSite) {
            for (const auto &w : e.wires) {
                gone.insert({e.block, w});
            }
        }
    }
    return problems;
}

std::size_t register_width(const SwitchInstance &instance) {
    const std::size_t width = instance.num_ports * 2 * instance.params.n() + 1;
    if (instance.num_ports < 2 || (instance.num_ports & (instance.num_ports - 1)) != 0) {
        throw std::invalid_argument("port count must be a power of two >= 2");
    }
    if (width > StateVector::kMaxQubits) {
        throw std::invalid_argument("switch needs " + std::to_string(width) +
                                    " qubits; dense simulation is capped at " +
                                    std::to_string(StateVector::kMaxQubits));
    }
    return width;
}

SwitchResult run_switch(const SwitchInstance &instance,
                        std::span<const PortStream> inputs, std::mt19937_64 &rng) {
    return run_switch_impl(instance, inputs, rng, true);
}

SwitchResult run_switch_2x2(std::span<const PortStream> inputs, bool commute,
                            codec::CodeParams params, std::mt19937_64 &rng) {
    SwitchInstance instance{2, params, routing_from_control(commute)};
    return run_switch(instance, inputs, rng);
}

ProbeResult no_signaling_probe(const SwitchInstance &instance,
                               std::span<const PortStream> inputs, std::size_t slot) {
    validate(instance, inputs);
    const std::size_t d = instance.params.d();
    if (slot < 1 || slot > d) {
        throw std::invalid_argument("probe slot " + std::to_string(slot) +
                                    " is not before the routing decision (slots 1.." +
                                    std::to_string(d) + ")");
    }
    const benes::Network network = benes::route(instance.routing);
    BlockCircuit circuit(instance, 0, nullptr);
    circuit.run(block_inputs(inputs, 0, instance.params.n()), network, slot, nullptr);

    std::vector<DensityMatrix> per_destination;
    std::vector<QubitIndex> all;
    for (std::size_t p = 0; p < instance.num_ports; ++p) {
        std::vector<QubitIndex> sent;
        for (std::size_t m = 0; m < slot; ++m) {
            sent.push_back(circuit.transmitted(p, m));
        }
        per_destination.push_back(partial_trace(circuit.state(), sent));
        all.insert(all.end(), sent.begin(), sent.end());
    }
    return {std::move(per_destination), partial_trace(circuit.state(), all)};
}

std::vector<std::vector<std::string>> sample_destinations(
    const SwitchInstance &instance, std::span<const PortStream> inputs,
    std::size_t trials, std::uint64_t seed) {
    validate(instance, inputs);
    std::vector<std::vector<std::string>> out(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(t),
                          static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
        std::mt19937_64 rng(seq);
        const SwitchResult r = run_switch_impl(instance, inputs, rng, false);
        std::vector<std::string> bits;
        for (const auto &o : r.outputs) {
            bits.push_back(o.bits());
        }
        out[static_cast<std::size_t>(t)] = std::move(bits);
    }
    return out;
}

} // namespace delcom::switching
