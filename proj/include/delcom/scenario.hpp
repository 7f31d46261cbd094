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
 * Network scenario files and their CSV report.
 *
 * A scenario file is a list of `key = value` lines grouped under `[id]`
 * headers; `#` starts a comment. Required keys: distance, t_q, nodes, t_p,
 * packet_qubits. Optional: mode (classical | delayed, default delayed),
 * parity_mode (granted-parity | parity-qubit | per-switch-decoder, default
 * granted-parity), seed (default 0), t_p_nodes (comma-separated per-switch
 * processing times). Lines before the first header form scenario "1".
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "delcom/netsim.hpp"

namespace delcom::netsim {

struct Scenario {
    std::string id;
    DelayModel model;
    Mode mode = Mode::delayed;
    ParityMode parity_mode = ParityMode::granted_parity;
    std::uint64_t seed = 0;
};

/// Throws ConfigError naming the offending key.
[[nodiscard]] std::vector<Scenario> parse_scenarios(std::istream &in);

struct ScenarioResult {
    std::string id;
    double classical_delay = 0.0;
    double delayed_delay = 0.0;
    double bitrate_classical = 0.0;
    double bitrate_delayed = 0.0;
    double improvement = 0.0;
    double improvement_parity = 0.0;
    /// Run of the scenario's own mode over its seeded route.
    RouteResult route;
};

/// Simulates both modes over a seeded random route and checks them against
/// the closed forms (relative error 1e-9); a mismatch throws std::logic_error.
[[nodiscard]] ScenarioResult evaluate(const Scenario &scenario);

/// Header: scenario,classical_delay,delayed_delay,bitrate_classical,
/// bitrate_delayed,improvement,improvement_parity
void write_results_csv(std::ostream &out, const std::vector<ScenarioResult> &results);

/// scenario,time,kind,location,encoding
void write_event_log_csv(std::ostream &out, const std::vector<ScenarioResult> &results);

/// 12 significant digits, trailing zeros dropped.
[[nodiscard]] std::string format_number(double v);

} // namespace delcom::netsim
