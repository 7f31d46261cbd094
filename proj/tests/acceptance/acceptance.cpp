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
// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "delcom/codec.hpp"
#include "delcom/density_matrix.hpp"
#include "delcom/netsim.hpp"
#include "delcom/switch_sim.hpp"

using namespace delcom;
using codec::CodeParams;
using codec::CodeWord;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

void fail(Outcome &o, const std::string &why) {
    if (o.passed) {
        o.detail = why;
    }
    o.passed = false;
}

int run_cli(const std::string &args, std::string &out) {
    const std::string cmd = std::string(DELCOM_CLI) + " " + args;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return -1;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    out.clear();
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int raw = pclose(pipe);
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    return parts;
}

std::string bits_of(std::uint64_t v, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
        s[width - 1 - k] = ((v >> k) & 1U) ? '1' : '0';
    }
    return s;
}

const std::string kData = DELCOM_TEST_DATA;

// ---------------------------------------------------------------------------

Outcome golden_table(unsigned n, const std::string &golden) {
    Outcome o;
    std::string out;
    if (run_cli("codetable --n " + std::to_string(n), out) != 0) {
        fail(o, "codetable exited nonzero");
        return o;
    }
    if (out != slurp(kData + "/" + golden)) {
        fail(o, "output differs from " + golden);
    }
    // Each data row: word,basis,sign,magnitude with the expected magnitude only.
    const auto lines = split(out, '\n');
    const std::size_t terms = std::size_t{1} << (n / 2);
    if (lines.size() != 1 + (std::size_t{1} << n) * terms) {
        fail(o, "unexpected row count");
    }
    const std::string magnitude = n == 2 ? "1/sqrt(2)" : "1/2";
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(lines[i], ',');
        if (cells.size() != 4 || cells[3] != magnitude || (cells[2] != "+" && cells[2] != "-")) {
            fail(o, "malformed row " + lines[i]);
        }
    }
    o.detail = o.passed ? std::to_string(lines.size() - 1) + " terms byte-identical to " + golden
                        : o.detail;
    return o;
}

Outcome criterion_bell() {
    Outcome o = golden_table(2, "bell_n2.csv");
    // Written out by hand: 00 -> |00>+|11>, 01 -> |01>+|10>, 10 -> |00>-|11>, 11 -> |01>-|10>.
    const std::array<std::array<double, 4>, 4> expected{{{1, 0, 0, 1},
                                                         {0, 1, 1, 0},
                                                         {1, 0, 0, -1},
                                                         {0, 1, -1, 0}}};
    const CodeParams p{2};
    for (std::uint32_t w = 0; w < 4; ++w) {
        const auto s = codec::encode_analytic(p, CodeWord::from_value(p, w)).state;
        for (std::size_t x = 0; x < 4; ++x) {
            if (std::abs(s[x] - Amplitude{expected[w][x] / std::sqrt(2.0)}) > kExactTol) {
                fail(o, "word " + bits_of(w, 2) + " amplitude mismatch");
            }
        }
    }
    return o;
}

Outcome criterion_round_trip() {
    Outcome o;
    std::size_t cases = 0;
    std::size_t expected_cases = 0;
    double worst = 1.0;
    for (unsigned n : {2U, 4U, 6U}) {
        const CodeParams p{n};
        expected_cases += std::size_t{1} << n;
        for (std::uint32_t w = 0; w < p.num_words(); ++w) {
            const auto word = CodeWord::from_value(p, w);
            const auto report = codec::decode_nearest(codec::encode_analytic(p, word));
            worst = std::min(worst, report.fidelity);
            if (!(report.word == word)) {
                fail(o, "n=" + std::to_string(n) + " word " + word.to_string(p));
            }
            ++cases;
        }
    }
    if (cases != expected_cases || cases != 4 + 16 + 64) {
        fail(o, "case count " + std::to_string(cases));
    }
    if (worst < 1.0 - 1e-10) {
        fail(o, "fidelity dropped to " + std::to_string(worst));
    }
    if (o.passed) {
        std::ostringstream d;
        d << cases << " words decoded, min fidelity 1 - " << (1.0 - worst);
        o.detail = d.str();
    }
    return o;
}

Outcome criterion_local() {
    Outcome o;
    double worst = 0.0;
    for (unsigned n : {2U, 4U, 6U}) {
        const CodeParams p{n};
        for (std::uint32_t w = 0; w < p.num_words(); ++w) {
            const auto word = CodeWord::from_value(p, w);
            const auto local = codec::encode_local(codec::make_ancilla(p), word).state;
            const auto analytic = codec::encode_analytic(p, word).state;
            worst = std::max(worst, std::abs(std::abs(inner_product(local, analytic)) - 1.0));
        }
    }
    if (worst > 1e-12) {
        fail(o, "max deviation " + std::to_string(worst));
    }
    std::ostringstream d;
    d << "max | |<local|analytic>| - 1 | = " << worst;
    o.detail = o.passed ? d.str() : o.detail;
    return o;
}

Outcome criterion_gram() {
    Outcome o;
    double worst = 0.0;
    for (unsigned n : {2U, 4U, 6U}) {
        const CodeParams p{n};
        std::vector<StateVector> states;
        for (std::uint32_t w = 0; w < p.num_words(); ++w) {
            states.push_back(codec::encode_analytic(p, CodeWord::from_value(p, w)).state);
        }
        for (std::size_t a = 0; a < states.size(); ++a) {
            for (std::size_t b = 0; b < states.size(); ++b) {
                const Amplitude g = inner_product(states[a], states[b]);
                worst = std::max(worst, std::abs(g - Amplitude{a == b ? 1.0 : 0.0}));
            }
        }
    }
    if (worst > 1e-10) {
        fail(o, "max Gram deviation " + std::to_string(worst));
    }
    std::ostringstream d;
    d << "max |G - I| = " << worst;
    o.detail = o.passed ? d.str() : o.detail;
    return o;
}

Outcome criterion_no_signaling() {
    Outcome o;
    double worst = 0.0;
    std::size_t probes = 0;
    for (unsigned n : {2U, 4U}) {
        const CodeParams p{n};
        for (std::uint64_t v = 0; v < (1ULL << (2 * n)); ++v) {
            const auto all = bits_of(v, 2 * n);
            const std::vector<switching::PortStream> in{
                switching::PortStream::from_bits(all.substr(0, n)),
                switching::PortStream::from_bits(all.substr(n))};
            for (std::size_t slot = 1; slot <= p.d(); ++slot) {
                const auto c0 = switching::no_signaling_probe({2, p, {0, 1}}, in, slot);
                const auto c1 = switching::no_signaling_probe({2, p, {1, 0}}, in, slot);
                for (std::size_t dst = 0; dst < 2; ++dst) {
                    worst = std::max(worst, trace_distance(c0.per_destination[dst],
                                                           c1.per_destination[dst]));
                }
                worst = std::max(worst, trace_distance(c0.joint, c1.joint));
                ++probes;
            }
        }
    }
    if (worst >= 1e-10) {
        fail(o, "trace distance " + std::to_string(worst));
    }
    std::ostringstream d;
    d << probes << " probes over d=1,2, max trace distance " << worst;
    o.detail = o.passed ? d.str() : o.detail;
    return o;
}

Outcome criterion_transcript() {
    Outcome o;
    std::size_t dependent_rows = 0;
    const auto path = std::filesystem::temp_directory_path() / "delcom_acceptance_transcript.csv";
    for (unsigned d : {1U, 2U}) {
        const unsigned n = 2 * d;
        for (int c : {0, 1}) {
            const std::string s1(2 * n, '1');
            std::string s2;
            for (unsigned k = 0; k < 2 * n; ++k) {
                s2 += (k % 2 == 0) ? '0' : '1';
            }
            std::string out;
            const std::string args = "switch --d " + std::to_string(d) + " --c " +
                                     std::to_string(c) + " --s1 " + s1 + " --s2 " + s2 +
                                     " --transcript " + path.string();
            if (run_cli(args, out) != 0) {
                fail(o, "switch run failed: " + args);
                continue;
            }
            // Collect wires emitted in the first d slots of each block, then
            // make sure no control-dependent row ever names one of them.
            const auto lines = split(slurp(path), '\n');
            if (lines.empty() || lines[0] != "block,slot,site,gate,wires,control_dependent") {
                fail(o, "bad transcript header");
                continue;
            }
            std::set<std::pair<std::string, std::string>> early;
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 1; i < lines.size(); ++i) {
                auto cells = split(lines[i], ',');
                if (cells.size() != 6) {
                    fail(o, "malformed transcript row " + lines[i]);
                    continue;
                }
                const std::size_t block = std::stoul(cells[0]);
                const std::size_t local = std::stoul(cells[1]) - block * n;
                if (cells[3] == "emit" && local >= 1 && local <= d) {
                    for (const auto &w : split(cells[4], ';')) {
                        early.insert({cells[0], w});
                    }
                }
                rows.push_back(std::move(cells));
            }
            for (const auto &cells : rows) {
                if (cells[5] != "1") {
                    continue;
                }
                ++dependent_rows;
                for (const auto &w : split(cells[4], ';')) {
                    if (early.count({cells[0], w}) != 0) {
                        fail(o, "control-dependent " + cells[3] + " on emitted " + w);
                    }
                }
            }
            if (early.size() != 2 * d * (2 * n / n)) {
                fail(o, "expected " + std::to_string(2 * d * 2) + " early emissions");
            }
        }
    }
    std::filesystem::remove(path);
    if (o.passed) {
        o.detail = "0 violations among " + std::to_string(dependent_rows) +
                   " control-dependent gates (d=1,2; C=0,1)";
    }
    return o;
}

Outcome exhaustive_routing(const switching::SwitchInstance &inst, std::size_t len,
                           std::size_t &cases) {
    Outcome o;
    std::mt19937_64 rng(1);
    const std::size_t total = inst.num_ports * len;
    for (std::uint64_t v = 0; v < (1ULL << total); ++v) {
        const auto all = bits_of(v, total);
        std::vector<switching::PortStream> in;
        for (std::size_t p = 0; p < inst.num_ports; ++p) {
            in.push_back(switching::PortStream::from_bits(all.substr(p * len, len)));
        }
        const auto r = switching::run_switch(inst, in, rng);
        for (std::size_t p = 0; p < inst.num_ports; ++p) {
            if (r.outputs[inst.routing[p]].bits() != in[p].bits()) {
                fail(o, "inputs " + all + " source " + std::to_string(p + 1));
            }
        }
        ++cases;
    }
    return o;
}

Outcome criterion_routing() {
    Outcome o;
    std::size_t cases = 0;
    for (unsigned n : {2U, 4U}) {
        for (bool c : {false, true}) {
            const switching::SwitchInstance inst{2, CodeParams{n},
                                                 switching::routing_from_control(c)};
            const auto sub = exhaustive_routing(inst, n, cases);
            if (!sub.passed) {
                fail(o, sub.detail);
            }
        }
    }

    // Quantum payload: each destination's outcome distribution against the
    // product of Born probabilities of the source routed to it.
    const std::array<std::array<double, 2>, 2> theta{{{0.4, 1.2}, {0.8, 0.25}}};
    std::vector<switching::PortStream> in;
    for (const auto &row : theta) {
        std::vector<switching::QubitState> qs;
        for (double th : row) {
            qs.push_back({std::cos(th), std::polar(std::sin(th), 1.3)});
        }
        in.push_back(switching::PortStream::prepared(qs));
    }
    constexpr std::size_t kTrials = 10000;
    double worst_tv = 0.0;
    for (bool c : {false, true}) {
        const switching::SwitchInstance inst{2, CodeParams{2}, switching::routing_from_control(c)};
        const auto samples = switching::sample_destinations(inst, in, kTrials, 77);
        for (std::size_t src = 0; src < 2; ++src) {
            std::map<std::string, double> freq;
            for (const auto &s : samples) {
                freq[s[inst.routing[src]]] += 1.0 / kTrials;
            }
            double tv = 0.0;
            for (std::uint64_t v = 0; v < 4; ++v) {
                const auto key = bits_of(v, 2);
                double p = 1.0;
                for (std::size_t k = 0; k < 2; ++k) {
                    const double p1 = std::pow(std::sin(theta[src][k]), 2);
                    p *= key[k] == '1' ? p1 : 1.0 - p1;
                }
                tv += std::abs(p - freq[key]);
            }
            worst_tv = std::max(worst_tv, tv / 2.0);
        }
    }
    if (worst_tv >= 0.02) {
        fail(o, "quantum payload TV " + std::to_string(worst_tv));
    }
    if (o.passed) {
        std::ostringstream d;
        d << cases << " classical cases exact; quantum payload max TV " << worst_tv
          << " over " << kTrials << " trials";
        o.detail = d.str();
    }
    return o;
}

Outcome criterion_formulas() {
    Outcome o;
    netsim::DelayModel m;
    m.distance = 100.0;
    m.t_q = 5e-6;
    m.nodes = 4;
    m.t_p = 1e-3;
    m.packet_qubits = 9;
    // D t_q = 100 * 5e-6 = 5e-4 and N t_p = 4 * 1e-3 = 4e-3,
    // so 1 + 4e-3 / 5e-4 = 1 + 8 = 9, and 9/(9+1) * 9 = 8.1.
    if (std::abs(netsim::improvement(m) - 9.0) > 1e-12) {
        fail(o, "improvement != 9");
    }
    if (std::abs(netsim::improvement_with_parity(m) - 8.1) > 1e-12) {
        fail(o, "improvement_with_parity != 8.1");
    }
    std::mt19937_64 rng(1000);
    std::uniform_real_distribution<double> e(-3.0, 3.0);
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        netsim::DelayModel r;
        r.distance = std::pow(10.0, e(rng));
        r.t_q = 1e-6 * std::pow(10.0, e(rng));
        r.nodes = rng() % 40;
        r.t_p = 1e-4 * std::pow(10.0, e(rng));
        r.packet_qubits = 1 + rng() % 1000;
        const auto route = netsim::Route::random_split(r, netsim::ParityMode::granted_parity, rng());
        const double c = netsim::simulate_route(route, r, netsim::Mode::classical).arrival_time;
        const double d = netsim::simulate_route(route, r, netsim::Mode::delayed).arrival_time;
        const double cf = r.distance * r.t_q + static_cast<double>(r.nodes) * r.t_p;
        const double df = r.distance * r.t_q;
        worst = std::max({worst, std::abs(c - cf) / cf, std::abs(d - df) / df});
    }
    if (worst >= 1e-9) {
        fail(o, "simulation relative error " + std::to_string(worst));
    }
    if (o.passed) {
        std::ostringstream d;
        d << "9 and 8.1 exact; 1000 random routes, max relative error " << worst;
        o.detail = d.str();
    }
    return o;
}

Outcome criterion_four_ports() {
    Outcome o;
    std::size_t cases = 0;
    const std::vector<benes::Permutation> perms{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    for (const auto &perm : perms) {
        const auto sub = exhaustive_routing({4, CodeParams{2}, perm}, 2, cases);
        if (!sub.passed) {
            fail(o, sub.detail);
        }
    }
    if (o.passed) {
        o.detail = std::to_string(cases) + " cases over 3 permutations exact";
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> check;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "four-qubit code table", 1.0, [] { return golden_table(4, "table1_n4.csv"); }},
        {2, "Bell code table", 0.0, criterion_bell},
        {3, "encode/decode round trip", 5.0, criterion_round_trip},
        {4, "local encoding equivalence", 0.0, criterion_local},
        {5, "orthonormality", 0.0, criterion_gram},
        {6, "no-signaling before routing", 0.0, criterion_no_signaling},
        {7, "delayed-action transcript", 0.0, criterion_transcript},
        {8, "end-to-end routing", 60.0, criterion_routing},
        {9, "delay formulas", 0.0, criterion_formulas},
        {10, "four-port routing", 0.0, criterion_four_ports},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = c.check();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0.0 && secs >= c.limit_seconds) {
            fail(o, "took " + std::to_string(secs) + " s, limit " +
                        std::to_string(c.limit_seconds) + " s");
        }
        std::printf("[%s] criterion %d %s: %s (%.3f s)\n", o.passed ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), o.detail.c_str(), secs);
        failures += o.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
