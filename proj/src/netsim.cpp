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
#include "delcom/netsim.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>

namespace delcom::netsim {

namespace {
void require_positive(double v, const char *what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

Encoding flip(Encoding e) {
    return e == Encoding::regular ? Encoding::superdense : Encoding::regular;
}

double processing_at(const DelayModel &m, std::size_t node) {
    return m.t_p_per_node.empty() ? m.t_p : m.t_p_per_node[node - 1];
}

struct PendingEvent {
    double time;
    std::uint64_t seq;
    std::string kind;
    std::size_t location;

    bool operator>(const PendingEvent &o) const {
        return std::tie(time, seq) > std::tie(o.time, o.seq);
    }
};
} // namespace

void DelayModel::validate() const {
    require_positive(distance, "distance");
    require_positive(t_q, "t_q");
    require_positive(t_p, "t_p");
    if (packet_qubits < 1) {
        throw std::invalid_argument("packet_qubits must be at least 1");
    }
    if (!t_p_per_node.empty()) {
        if (t_p_per_node.size() != nodes) {
            throw std::invalid_argument("per-node processing list needs one entry per node");
        }
        for (double t : t_p_per_node) {
            require_positive(t, "per-node t_p");
        }
    }
}

double DelayModel::total_processing() const {
    if (t_p_per_node.empty()) {
        return static_cast<double>(nodes) * t_p;
    }
    return std::accumulate(t_p_per_node.begin(), t_p_per_node.end(), 0.0);
}

double classical_delay(const DelayModel &m) {
    m.validate();
    return m.distance * m.t_q + m.total_processing();
}

double delayed_delay(const DelayModel &m) {
    m.validate();
    return m.distance * m.t_q;
}

double bitrate(const DelayModel &m, bool delayed_commutation) {
    return 1.0 / (delayed_commutation ? delayed_delay(m) : classical_delay(m));
}

double improvement(const DelayModel &m) {
    m.validate();
    return 1.0 + m.total_processing() / (m.distance * m.t_q);
}

double improvement_with_parity(const DelayModel &m) {
    const auto q = static_cast<double>(m.packet_qubits);
    return q / (q + 1.0) * improvement(m);
}

std::string to_string(Mode mode) {
    return mode == Mode::classical ? "classical" : "delayed";
}

std::string to_string(ParityMode mode) {
    switch (mode) {
    case ParityMode::granted_parity:
        return "granted-parity";
    case ParityMode::parity_qubit:
        return "parity-qubit";
    case ParityMode::per_switch_decoder:
        return "per-switch-decoder";
    }
    return "?";
}

std::string to_string(Encoding encoding) {
    return encoding == Encoding::regular ? "regular" : "superdense";
}

Mode parse_mode(const std::string &text) {
    if (text == "classical") {
        return Mode::classical;
    }
    if (text == "delayed") {
        return Mode::delayed;
    }
    throw std::invalid_argument("unknown mode '" + text + "'");
}

ParityMode parse_parity_mode(const std::string &text) {
    for (auto m : {ParityMode::granted_parity, ParityMode::parity_qubit,
                   ParityMode::per_switch_decoder}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    throw std::invalid_argument("unknown parity mode '" + text + "'");
}

Route Route::uniform(const DelayModel &m, ParityMode parity) {
    const std::size_t links = m.nodes + 1;
    return {m.nodes, std::vector<double>(links, m.distance / static_cast<double>(links)),
            parity};
}

Route Route::random_split(const DelayModel &m, ParityMode parity, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::vector<double> w(m.nodes + 1);
    for (auto &x : w) {
        x = weight(rng);
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto &x : w) {
        x *= m.distance / total;
    }
    return {m.nodes, std::move(w), parity};
}

RouteResult simulate_route(const Route &route, const DelayModel &m, Mode mode) {
    m.validate();
    if (route.hops != m.nodes) {
        throw std::invalid_argument("route has " + std::to_string(route.hops) +
                                    " switches but the model has " +
                                    std::to_string(m.nodes));
    }
    if (route.link_distances.size() != route.hops + 1) {
        throw std::invalid_argument("route needs hops + 1 link distances");
    }
    for (double l : route.link_distances) {
        require_positive(l, "link distance");
    }
    const double sum =
        std::accumulate(route.link_distances.begin(), route.link_distances.end(), 0.0);
    if (std::abs(sum - m.distance) > 1e-12 * std::max(1.0, m.distance)) {
        throw std::invalid_argument("link distances do not add up to the total distance");
    }

    const bool delayed = mode == Mode::delayed;
    const std::size_t destination = route.hops + 1;
    const bool parity_qubit = delayed && route.parity_mode == ParityMode::parity_qubit;
    const bool decoders = delayed && route.parity_mode == ParityMode::per_switch_decoder;

    RouteResult result;
    result.carried_qubits = m.packet_qubits + (parity_qubit ? 1 : 0);
    result.throughput_factor = static_cast<double>(m.packet_qubits) /
                               static_cast<double>(result.carried_qubits);

    std::priority_queue<PendingEvent, std::vector<PendingEvent>, std::greater<>> queue;
    std::uint64_t seq = 0;
    auto schedule = [&](double t, std::string kind, std::size_t where) {
        queue.push({t, seq++, std::move(kind), where});
    };
    Encoding encoding = Encoding::regular;
    auto record = [&](const PendingEvent &e) {
        result.events.push_back({e.time, e.kind, e.location, encoding});
    };
    auto send = [&](double t, std::size_t from) {
        schedule(t + route.link_distances[from] * m.t_q,
                 from + 1 == destination ? "arrive_destination" : "arrive", from + 1);
    };

    schedule(0.0, "depart", 0);
    while (!queue.empty()) {
        const PendingEvent e = queue.top();
        queue.pop();
        if (e.kind == "depart") {
            record(e);
            send(e.time, 0);
        } else if (e.kind == "arrive") {
            record(e);
            const double t_p = processing_at(m, e.location);
            if (delayed) {
                // The head leaves at once; the decision lands t_p later and
                // only acts on qubits still inside the switch.
                if (decoders && encoding == Encoding::superdense) {
                    encoding = Encoding::regular;
                    schedule(e.time, "decode", e.location);
                }
                schedule(e.time, "forward", e.location);
                schedule(e.time + t_p, "route_ready", e.location);
            } else {
                schedule(e.time + t_p, "route_ready", e.location);
                schedule(e.time + t_p, "forward", e.location);
            }
        } else if (e.kind == "forward") {
            if (delayed) {
                encoding = flip(encoding);
                record(e);
                if (parity_qubit) {
                    record({e.time, 0, "parity_toggle", e.location});
                }
            } else {
                record(e);
            }
            send(e.time, e.location);
        } else if (e.kind == "arrive_destination") {
            record(e);
            result.arrival_time = e.time;
            if (decoders && encoding == Encoding::superdense) {
                encoding = Encoding::regular;
                schedule(e.time, "decode", e.location);
            }
        } else {
            record(e);
        }
    }
    result.final_encoding = encoding;
    return result;
}

} // namespace delcom::netsim
