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
#include "delcom/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "delcom/error.hpp"

namespace delcom::netsim {

namespace {
const std::vector<std::string> kRequired = {"distance", "t_q", "nodes", "t_p",
                                            "packet_qubits"};
const std::vector<std::string> kOptional = {"mode", "parity_mode", "seed", "t_p_nodes"};

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string &key, const std::string &text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw ConfigError(key, "'" + text + "' is not a number");
    }
    if (used != text.size()) {
        throw ConfigError(key, "'" + text + "' is not a number");
    }
    return v;
}

std::uint64_t parse_count(const std::string &key, const std::string &text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        })) {
        throw ConfigError(key, "'" + text + "' is not a non-negative integer");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception &) {
        throw ConfigError(key, "'" + text + "' is out of range");
    }
}

Scenario build(const std::string &id, const std::map<std::string, std::string> &kv) {
    for (const auto &key : kRequired) {
        if (!kv.count(key)) {
            throw ConfigError(key, "missing in scenario '" + id + "'");
        }
    }
    Scenario s;
    s.id = id;
    s.model.distance = parse_double("distance", kv.at("distance"));
    s.model.t_q = parse_double("t_q", kv.at("t_q"));
    s.model.nodes = parse_count("nodes", kv.at("nodes"));
    s.model.t_p = parse_double("t_p", kv.at("t_p"));
    s.model.packet_qubits = parse_count("packet_qubits", kv.at("packet_qubits"));
    if (auto it = kv.find("mode"); it != kv.end()) {
        try {
            s.mode = parse_mode(it->second);
        } catch (const std::invalid_argument &e) {
            throw ConfigError("mode", e.what());
        }
    }
    if (auto it = kv.find("parity_mode"); it != kv.end()) {
        try {
            s.parity_mode = parse_parity_mode(it->second);
        } catch (const std::invalid_argument &e) {
            throw ConfigError("parity_mode", e.what());
        }
    }
    if (auto it = kv.find("seed"); it != kv.end()) {
        s.seed = parse_count("seed", it->second);
    }
    if (auto it = kv.find("t_p_nodes"); it != kv.end()) {
        std::stringstream list(it->second);
        std::string item;
        while (std::getline(list, item, ',')) {
            s.model.t_p_per_node.push_back(parse_double("t_p_nodes", trim(item)));
        }
        if (s.model.t_p_per_node.size() != s.model.nodes) {
            throw ConfigError("t_p_nodes", "needs one entry per node");
        }
    }
    auto check = [&](bool ok, const std::string &key, const std::string &what) {
        if (!ok) {
            throw ConfigError(key, what);
        }
    };
    check(s.model.distance > 0 && std::isfinite(s.model.distance), "distance", "must be positive");
    check(s.model.t_q > 0 && std::isfinite(s.model.t_q), "t_q", "must be positive");
    check(s.model.t_p > 0 && std::isfinite(s.model.t_p), "t_p", "must be positive");
    check(s.model.packet_qubits >= 1, "packet_qubits", "must be at least 1");
    for (double t : s.model.t_p_per_node) {
        check(t > 0 && std::isfinite(t), "t_p_nodes", "entries must be positive");
    }
    return s;
}

void expect_close(double simulated, double closed, const char *what) {
    if (std::abs(simulated - closed) > 1e-9 * std::abs(closed)) {
        std::ostringstream msg;
        msg << what << ": simulated " << simulated << " vs closed form " << closed;
        throw std::logic_error(msg.str());
    }
}
} // namespace

std::vector<Scenario> parse_scenarios(std::istream &in) {
    std::vector<Scenario> out;
    std::string id = "1";
    std::map<std::string, std::string> kv;
    bool open = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ConfigError("line " + std::to_string(line_no), "malformed header");
            }
            if (open) {
                out.push_back(build(id, kv));
            }
            id = trim(line.substr(1, line.size() - 2));
            kv.clear();
            open = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no), "expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(kRequired.begin(), kRequired.end(), key) == kRequired.end() &&
            std::find(kOptional.begin(), kOptional.end(), key) == kOptional.end()) {
            throw ConfigError(key, "unknown key");
        }
        if (kv.count(key)) {
            throw ConfigError(key, "given twice in scenario '" + id + "'");
        }
        kv[key] = value;
        open = true;
    }
    if (open) {
        out.push_back(build(id, kv));
    }
    if (out.empty()) {
        throw ConfigError("scenario", "file holds no scenarios");
    }
    return out;
}

ScenarioResult evaluate(const Scenario &scenario) {
    const DelayModel &m = scenario.model;
    const Route route = Route::random_split(m, scenario.parity_mode, scenario.seed);
    const RouteResult classical = simulate_route(route, m, Mode::classical);
    const RouteResult delayed = simulate_route(route, m, Mode::delayed);

    expect_close(classical.arrival_time, classical_delay(m), "classical delay");
    expect_close(delayed.arrival_time, delayed_delay(m), "delayed delay");

    ScenarioResult r;
    r.id = scenario.id;
    r.classical_delay = classical_delay(m);
    r.delayed_delay = delayed_delay(m);
    r.bitrate_classical = bitrate(m, false);
    r.bitrate_delayed = bitrate(m, true);
    r.improvement = improvement(m);
    r.improvement_parity = improvement_with_parity(m);
    r.route = scenario.mode == Mode::classical ? classical : delayed;
    return r;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_results_csv(std::ostream &out, const std::vector<ScenarioResult> &results) {
    out << "scenario,classical_delay,delayed_delay,bitrate_classical,bitrate_delayed,"
           "improvement,improvement_parity\n";
    for (const auto &r : results) {
        out << r.id << ',' << format_number(r.classical_delay) << ','
            << format_number(r.delayed_delay) << ',' << format_number(r.bitrate_classical)
            << ',' << format_number(r.bitrate_delayed) << ','
            << format_number(r.improvement) << ',' << format_number(r.improvement_parity)
            << '\n';
    }
}

void write_event_log_csv(std::ostream &out, const std::vector<ScenarioResult> &results) {
    out << "scenario,time,kind,location,encoding\n";
    for (const auto &r : results) {
        for (const auto &e : r.route.events) {
            out << r.id << ',' << format_number(e.time) << ',' << e.kind << ','
                << e.location << ',' << to_string(e.encoding) << '\n';
        }
    }
}

} // namespace delcom::netsim
