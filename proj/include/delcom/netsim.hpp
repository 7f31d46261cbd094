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
 * End-to-end delay of a packet crossing a chain of switches, in closed form
 * and as a discrete-event run over one concrete route.
 *
 * Times are in seconds. t_q is the time one qubit needs per unit of distance.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace delcom::netsim {

struct DelayModel {
    double distance = 1.0;       // D
    double t_q = 1.0;            // seconds per qubit per unit distance
    std::size_t nodes = 0;       // N intermediate switches
    double t_p = 0.0;            // processing time per switch
    std::size_t packet_qubits = 1; // Q_p
    /// Optional per-switch processing times; empty means t_p everywhere.
    std::vector<double> t_p_per_node;

    /// Throws std::invalid_argument on non-positive quantities.
    void validate() const;
    /// sum of processing times over the N switches.
    [[nodiscard]] double total_processing() const;
};

/// D*t_q + N*t_p
[[nodiscard]] double classical_delay(const DelayModel &m);
/// D*t_q; processing overlaps with transmission.
[[nodiscard]] double delayed_delay(const DelayModel &m);
[[nodiscard]] double bitrate(const DelayModel &m, bool delayed_commutation);
/// 1 + N*t_p / (D*t_q)
[[nodiscard]] double improvement(const DelayModel &m);
/// Q_p/(Q_p+1) * improvement(m): one extra qubit carries the hop parity.
[[nodiscard]] double improvement_with_parity(const DelayModel &m);

enum class Mode { classical, delayed };

/// How the receiver learns whether the payload is in the superdense or the
/// regular encoding after an arbitrary number of switches.
enum class ParityMode { granted_parity, parity_qubit, per_switch_decoder };

enum class Encoding { regular, superdense };

[[nodiscard]] std::string to_string(Mode mode);
[[nodiscard]] std::string to_string(ParityMode mode);
[[nodiscard]] std::string to_string(Encoding encoding);
[[nodiscard]] Mode parse_mode(const std::string &text);
[[nodiscard]] ParityMode parse_parity_mode(const std::string &text);

/// A chain source -> switch 1 -> ... -> switch N -> destination.
struct Route {
    std::size_t hops = 0;               // switches traversed
    std::vector<double> link_distances; // hops + 1 links
    ParityMode parity_mode = ParityMode::granted_parity;

    /// Equal split of the total distance.
    static Route uniform(const DelayModel &m, ParityMode parity);
    /// Random positive split of the total distance, reproducible from seed.
    static Route random_split(const DelayModel &m, ParityMode parity,
                              std::uint64_t seed);
};

struct RouteEvent {
    double time = 0.0;
    std::string kind;
    /// 0 = source, k = switch k, hops + 1 = destination.
    std::size_t location = 0;
    Encoding encoding = Encoding::regular;
};

struct RouteResult {
    double arrival_time = 0.0;
    std::vector<RouteEvent> events;
    /// Encoding of the payload as it leaves the destination's input stage.
    Encoding final_encoding = Encoding::regular;
    std::size_t carried_qubits = 0;
    /// Fraction of carried qubits that are payload.
    double throughput_factor = 1.0;

    [[nodiscard]] double bitrate() const { return throughput_factor / arrival_time; }
};

/// Discrete-event run of one packet. Throws std::invalid_argument when the
/// route does not match the model (hop count, link count, distance sum).
[[nodiscard]] RouteResult simulate_route(const Route &route, const DelayModel &m,
                                         Mode mode);

} // namespace delcom::netsim
