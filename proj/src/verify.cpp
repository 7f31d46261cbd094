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
#include "delcom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "delcom/codec.hpp"
#include "delcom/density_matrix.hpp"
#include "delcom/netsim.hpp"
#include "delcom/switch_sim.hpp"

namespace delcom::verify {

namespace {

using codec::CodeParams;
using codec::CodeWord;

// Four-qubit code, row by row as published (ket labels, +/- signs, /2).
const std::map<std::string, std::string> kTable4 = {
    {"0000", "(|0000> + |0101> + |1010> + |1111>)/2"},
    {"0100", "(|0000> - |0101> + |1010> - |1111>)/2"},
    {"1000", "(|0000> + |0101> - |1010> - |1111>)/2"},
    {"1100", "(|0000> - |0101> - |1010> + |1111>)/2"},
    {"0001", "(|0001> + |0100> + |1011> + |1110>)/2"},
    {"0101", "(|0001> - |0100> + |1011> - |1110>)/2"},
    {"1001", "(|0001> + |0100> - |1011> - |1110>)/2"},
    {"1101", "(|0001> - |0100> - |1011> + |1110>)/2"},
    {"0010", "(|0010> + |0111> + |1000> + |1101>)/2"},
    {"0110", "(|0010> - |0111> + |1000> - |1101>)/2"},
    {"1010", "(|0010> + |0111> - |1000> - |1101>)/2"},
    {"1110", "(|0010> - |0111> - |1000> + |1101>)/2"},
    {"0011", "(|0011> + |0110> + |1001> + |1100>)/2"},
    {"0111", "(|0011> - |0110> + |1001> - |1100>)/2"},
    {"1011", "(|0011> + |0110> - |1001> - |1100>)/2"},
    {"1111", "(|0011> - |0110> - |1001> + |1100>)/2"},
};

// Bell encodings of the two-qubit switch.
const std::map<std::string, std::string> kTable2 = {
    {"00", "(|00> + |11>)/sqrt(2)"},
    {"10", "(|00> - |11>)/sqrt(2)"},
    {"01", "(|01> + |10>)/sqrt(2)"},
    {"11", "(|01> - |10>)/sqrt(2)"},
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

CheckResult table_check(const std::string &name, unsigned n,
                        const std::map<std::string, std::string> &golden) {
    std::ostringstream out;
    codec::write_code_table_pretty(out, CodeParams{n});
    std::istringstream lines(out.str());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        const auto colon = line.find(": ");
        const std::string word = line.substr(0, colon);
        const auto it = golden.find(word);
        if (it == golden.end() || line.substr(colon + 2) != it->second) {
            return {name, false, "row " + word + " differs: " + line};
        }
        ++rows;
    }
    if (rows != golden.size()) {
        return {name, false, std::to_string(rows) + " rows"};
    }
    return {name, true, std::to_string(rows) + " rows match"};
}

CheckResult orthonormal_check(unsigned n) {
    const CodeParams params{n};
    std::vector<StateVector> states;
    for (std::uint32_t w = 0; w < params.num_words(); ++w) {
        states.push_back(codec::encode_analytic(params, CodeWord::from_value(params, w)).state);
    }
    double worst = 0.0;
    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = 0; b < states.size(); ++b) {
            const double expected = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner_product(states[a], states[b]) - expected));
        }
    }
    return {"gram matrix is identity, n=" + std::to_string(n), worst <= kCircuitTol,
            "max deviation " + fmt(worst)};
}

CheckResult roundtrip_check(unsigned n) {
    const CodeParams params{n};
    std::size_t ok = 0;
    double worst_local = 0.0;
    for (std::uint32_t w = 0; w < params.num_words(); ++w) {
        const CodeWord word = CodeWord::from_value(params, w);
        const auto analytic = codec::encode_analytic(params, word);
        const auto report = codec::decode_nearest(analytic);
        if (report.word == word && report.fidelity >= 1.0 - kCircuitTol) {
            ++ok;
        }
        const auto local = codec::encode_local(codec::make_ancilla(params), word);
        worst_local = std::max(worst_local,
                               std::abs(std::abs(inner_product(local.state, analytic.state)) - 1.0));
    }
    const bool passed = ok == params.num_words() && worst_local <= kExactTol;
    return {"decode(encode) and local encoding, n=" + std::to_string(n), passed,
            std::to_string(ok) + "/" + std::to_string(params.num_words()) +
                " words, local overlap deviation " + fmt(worst_local)};
}

CheckResult codec_nosignal_check(unsigned n) {
    const CodeParams params{n};
    std::vector<QubitIndex> sent;
    for (unsigned m = 0; m < params.d(); ++m) {
        sent.push_back(QubitIndex{m});
    }
    const auto mixed = DensityMatrix::maximally_mixed(params.d());
    double worst = 0.0;
    for (std::uint32_t w = 0; w < params.num_words(); ++w) {
        const auto code = codec::encode_analytic(params, CodeWord::from_value(params, w));
        worst = std::max(worst, max_abs_diff(partial_trace(code.state, sent), mixed));
    }
    return {"sent half of every code state is maximally mixed, n=" + std::to_string(n),
            worst <= kCircuitTol, "max deviation " + fmt(worst)};
}

std::vector<switching::PortStream> random_streams(std::size_t ports, std::size_t len,
                                                  std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<switching::PortStream> out;
    for (std::size_t p = 0; p < ports; ++p) {
        std::string bits;
        for (std::size_t i = 0; i < len; ++i) {
            bits += coin(rng) ? '1' : '0';
        }
        out.push_back(switching::PortStream::from_bits(bits));
    }
    return out;
}

CheckResult switch_nosignal_check(unsigned n) {
    const CodeParams params{n};
    std::mt19937_64 rng(n);
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const auto inputs = random_streams(2, n, rng);
        for (std::size_t slot = 1; slot <= params.d(); ++slot) {
            const auto straight = switching::no_signaling_probe(
                {2, params, switching::routing_from_control(false)}, inputs, slot);
            const auto crossed = switching::no_signaling_probe(
                {2, params, switching::routing_from_control(true)}, inputs, slot);
            for (std::size_t p = 0; p < 2; ++p) {
                worst = std::max(worst, trace_distance(straight.per_destination[p],
                                                       crossed.per_destination[p]));
            }
            worst = std::max(worst, trace_distance(straight.joint, crossed.joint));
        }
    }
    return {"2x2 switch, d=" + std::to_string(params.d()) +
                ": sent qubits independent of C before the decision",
            worst < kCircuitTol, "max trace distance " + fmt(worst)};
}

CheckResult formula_example_check() {
    // D=100, t_q=5e-6, N=4, t_p=1e-3, Q_p=9:
    //   D t_q = 5e-4, N t_p = 4e-3, delay 4.5e-3
    //   improvement 1 + 4e-3/5e-4 = 9, with parity 9/10 * 9 = 8.1
    netsim::DelayModel m;
    m.distance = 100;
    m.t_q = 5e-6;
    m.nodes = 4;
    m.t_p = 1e-3;
    m.packet_qubits = 9;
    const bool ok = std::abs(netsim::classical_delay(m) - 4.5e-3) <= 1e-15 &&
                    std::abs(netsim::improvement(m) - 9.0) <= 1e-12 &&
                    std::abs(netsim::improvement_with_parity(m) - 8.1) <= 1e-12 &&
                    std::abs(netsim::bitrate(m, true) - 2000.0) <= 1e-9;
    std::ostringstream detail;
    detail.precision(12);
    detail << "delay " << netsim::classical_delay(m) << ", improvement "
           << netsim::improvement(m) << ", with parity "
           << netsim::improvement_with_parity(m);
    return {"worked delay example", ok, detail.str()};
}

CheckResult formula_simulation_check() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> nodes(0, 12);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        netsim::DelayModel m;
        m.distance = 1.0 + 999.0 * u(rng);
        m.t_q = 1e-9 + 1e-5 * u(rng);
        m.nodes = nodes(rng);
        m.t_p = 1e-6 + 1e-3 * u(rng);
        m.packet_qubits = 1 + static_cast<std::size_t>(1000 * u(rng));
        const auto route = netsim::Route::random_split(m, netsim::ParityMode::granted_parity, rng());
        const double c = netsim::simulate_route(route, m, netsim::Mode::classical).arrival_time;
        const double d = netsim::simulate_route(route, m, netsim::Mode::delayed).arrival_time;
        worst = std::max(worst, std::abs(c - netsim::classical_delay(m)) / netsim::classical_delay(m));
        worst = std::max(worst, std::abs(d - netsim::delayed_delay(m)) / netsim::delayed_delay(m));
    }
    return {"event simulation matches closed forms (1000 models)", worst < 1e-9,
            "max relative error " + fmt(worst)};
}

CheckResult routing_check(std::size_t ports, unsigned n,
                          const std::vector<benes::Permutation> &perms) {
    const CodeParams params{n};
    std::mt19937_64 rng(7);
    std::size_t ok = 0;
    std::size_t total = 0;
    std::size_t transcript_problems = 0;
    const std::uint32_t words = 1U << n;
    std::uint64_t combos = 1;
    for (std::size_t p = 0; p < ports; ++p) {
        combos *= words;
    }
    for (const auto &perm : perms) {
        for (std::uint64_t c = 0; c < combos; ++c) {
            std::vector<switching::PortStream> inputs;
            std::uint64_t rest = c;
            for (std::size_t p = 0; p < ports; ++p) {
                inputs.push_back(switching::PortStream::from_bits(
                    codec::bit_string(rest % words, n)));
                rest /= words;
            }
            const auto result = switching::run_switch({ports, params, perm}, inputs, rng);
            bool good = true;
            for (std::size_t s = 0; s < ports; ++s) {
                good = good && result.outputs[perm[s]].bits() == inputs[s].bits();
            }
            ok += good ? 1 : 0;
            ++total;
            transcript_problems +=
                switching::delayed_action_violations(result.transcript, params).size();
        }
    }
    return {std::to_string(ports) + "-port switch, d=" + std::to_string(params.d()) +
                ": destinations receive permuted sources",
            ok == total && transcript_problems == 0,
            std::to_string(ok) + "/" + std::to_string(total) + " cases, " +
                std::to_string(transcript_problems) + " transcript violations"};
}

void append(std::vector<CheckResult> &to, std::vector<CheckResult> from) {
    to.insert(to.end(), from.begin(), from.end());
}

std::vector<CheckResult> run_one(std::string_view suite) {
    if (suite == "table1") {
        return {table_check("four-qubit code table", 4, kTable4),
                table_check("Bell encodings", 2, kTable2)};
    }
    if (suite == "orthonormal") {
        return {orthonormal_check(2), orthonormal_check(4), orthonormal_check(6),
                roundtrip_check(2), roundtrip_check(4), roundtrip_check(6)};
    }
    if (suite == "nosignal") {
        return {codec_nosignal_check(2), codec_nosignal_check(4), codec_nosignal_check(6),
                switch_nosignal_check(2), switch_nosignal_check(4)};
    }
    if (suite == "formulas") {
        return {formula_example_check(), formula_simulation_check()};
    }
    if (suite == "routing") {
        return {routing_check(2, 2, {{0, 1}, {1, 0}}), routing_check(2, 4, {{0, 1}, {1, 0}}),
                routing_check(4, 2, {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 0, 1, 2}})};
    }
    throw std::invalid_argument("unknown verification suite '" + std::string(suite) + "'");
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"table1", "orthonormal", "nosignal",
                                                   "formulas", "routing", "all"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
    if (suite != "all") {
        return run_one(suite);
    }
    std::vector<CheckResult> out;
    for (const auto &name : suite_names()) {
        if (name != "all") {
            append(out, run_one(name));
        }
    }
    return out;
}

} // namespace delcom::verify
