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
// delcom: command-line driver for the delayed-commutation simulator.
//
// Exit codes: 0 success, 1 usage or input error, 2 contention, 3 failed
// verification.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "delcom/codec.hpp"
#include "delcom/error.hpp"
#include "delcom/scenario.hpp"
#include "delcom/switch_sim.hpp"
#include "delcom/verify.hpp"

namespace {

using namespace delcom;

constexpr int kExitUsage = 1;
constexpr int kExitContention = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writes to `path`, or stdout when empty.
template <class F> void with_output(const std::string &path, F &&write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    write(out);
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

std::vector<std::size_t> parse_ports(const std::string &text) {
    std::vector<std::size_t> out;
    for (const auto &item : split(text, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw UsageError("'" + item + "' is not a port number");
        }
    }
    return out;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// --- codetable -------------------------------------------------------------

struct CodetableOpts {
    unsigned n = 4;
    std::string out;
    bool pretty = false;
};

int cmd_codetable(const CodetableOpts &o) {
    const codec::CodeParams params{o.n};
    with_output(o.out, [&](std::ostream &os) {
        if (o.pretty) {
            codec::write_code_table_pretty(os, params);
        } else {
            codec::write_code_table_csv(os, params);
        }
    });
    return 0;
}

// --- encode / decode -------------------------------------------------------

struct EncodeOpts {
    unsigned n = 2;
    std::string word;
    bool local = false;
    std::string out;
};

int cmd_encode(const EncodeOpts &o) {
    const codec::CodeParams params{o.n};
    const auto word = codec::CodeWord::from_string(params, o.word);
    const auto code = o.local ? codec::encode_local(codec::make_ancilla(params), word)
                              : codec::encode_analytic(params, word);
    with_output(o.out, [&](std::ostream &os) {
        os << "basis,re,im\n";
        for (std::uint64_t x = 0; x < code.state.size(); ++x) {
            os << codec::bit_string(x, o.n) << ',' << fmt17(code.state[x].real()) << ','
               << fmt17(code.state[x].imag()) << '\n';
        }
    });
    return 0;
}

struct DecodeOpts {
    unsigned n = 2;
    std::string in;
};

int cmd_decode(const DecodeOpts &o) {
    const codec::CodeParams params{o.n};
    std::ifstream in(o.in);
    if (!in) {
        throw UsageError("cannot read " + o.in);
    }
    std::vector<Amplitude> amps(std::size_t{1} << o.n);
    std::string line;
    std::getline(in, line);
    if (line != "basis,re,im") {
        throw UsageError(o.in + ": expected header basis,re,im");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 3 || cells[0].size() != o.n) {
            throw UsageError(o.in + ": malformed row '" + line + "'");
        }
        const auto index = codec::CodeWord::from_string(params, cells[0]).value(params);
        amps[index] = {std::stod(cells[1]), std::stod(cells[2])};
    }
    codec::EncodedPair pair{params, StateVector::from_amplitudes(std::move(amps))};
    try {
        const auto word = codec::decode(pair);
        std::cout << word.to_string(params) << '\n';
        return 0;
    } catch (const codec::NotACodeState &e) {
        std::cerr << "delcom: " << e.what() << '\n';
        return kExitUsage;
    }
}

// --- switch ----------------------------------------------------------------

struct SwitchOpts {
    std::string s1, s2;
    std::string inputs;
    int c = -1;
    std::string perm;
    unsigned d = 1;
    std::uint64_t seed = 0;
    std::string transcript;
};

int cmd_switch(const SwitchOpts &o) {
    std::vector<std::string> payloads;
    if (!o.inputs.empty()) {
        payloads = split(o.inputs, ',');
    } else {
        payloads = {o.s1, o.s2};
    }
    std::vector<switching::PortStream> streams;
    for (const auto &p : payloads) {
        streams.push_back(switching::PortStream::from_bits(p));
    }

    benes::Permutation routing;
    if (!o.perm.empty()) {
        auto requested = parse_ports(o.perm);
        for (auto &r : requested) {
            if (r == 0) {
                throw UsageError("ports are numbered from 1");
            }
            --r;
        }
        if (requested.size() != streams.size()) {
            throw UsageError("--perm needs one destination per source");
        }
        routing = switching::routing_from_requests(requested);
    } else if (o.c >= 0 && streams.size() == 2) {
        routing = switching::routing_from_control(o.c == 1);
    } else {
        throw UsageError("give --c for two ports or --perm");
    }

    const switching::SwitchInstance instance{streams.size(), codec::CodeParams{2 * o.d},
                                             routing};
    std::mt19937_64 rng(o.seed);
    const auto result = switching::run_switch(instance, streams, rng);
    for (std::size_t p = 0; p < result.outputs.size(); ++p) {
        std::cout << 'D' << p + 1 << ": " << result.outputs[p].bits() << '\n';
    }
    if (!o.transcript.empty()) {
        with_output(o.transcript, [&](std::ostream &os) { result.transcript.write_csv(os); });
    }
    return 0;
}

// --- nosignal --------------------------------------------------------------

struct NosignalOpts {
    unsigned d = 1;
    std::size_t slot = 0;
    std::string s1, s2;
};

int cmd_nosignal(const NosignalOpts &o) {
    const codec::CodeParams params{2 * o.d};
    const std::string zeros(params.n(), '0');
    const std::vector<switching::PortStream> streams = {
        switching::PortStream::from_bits(o.s1.empty() ? zeros : o.s1),
        switching::PortStream::from_bits(o.s2.empty() ? zeros : o.s2)};
    std::vector<std::size_t> slots;
    if (o.slot != 0) {
        slots.push_back(o.slot);
    } else {
        for (std::size_t s = 1; s <= params.d(); ++s) {
            slots.push_back(s);
        }
    }
    bool ok = true;
    std::cout << "slot,destination,trace_distance\n";
    for (auto slot : slots) {
        const auto straight = switching::no_signaling_probe(
            {2, params, switching::routing_from_control(false)}, streams, slot);
        const auto crossed = switching::no_signaling_probe(
            {2, params, switching::routing_from_control(true)}, streams, slot);
        for (std::size_t p = 0; p < 2; ++p) {
            const double dist =
                trace_distance(straight.per_destination[p], crossed.per_destination[p]);
            ok = ok && dist < kCircuitTol;
            std::cout << slot << ",D" << p + 1 << ',' << fmt17(dist) << '\n';
        }
    }
    return ok ? 0 : kExitVerify;
}

// --- netsim ----------------------------------------------------------------

struct NetsimOpts {
    std::string scenario;
    std::string out;
    std::string log;
};

int cmd_netsim(const NetsimOpts &o) {
    std::ifstream in(o.scenario);
    if (!in) {
        throw UsageError("cannot read " + o.scenario);
    }
    std::vector<netsim::ScenarioResult> results;
    for (const auto &s : netsim::parse_scenarios(in)) {
        results.push_back(netsim::evaluate(s));
    }
    with_output(o.out, [&](std::ostream &os) { netsim::write_results_csv(os, results); });
    if (!o.log.empty()) {
        with_output(o.log, [&](std::ostream &os) { netsim::write_event_log_csv(os, results); });
    }
    return 0;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const std::string &suite) {
    bool ok = true;
    for (const auto &r : verify::run_suite(suite)) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
                  << '\n';
        ok = ok && r.passed;
    }
    return ok ? 0 : kExitVerify;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Delayed-commutation switch simulator"};
    app.require_subcommand(1);

    CodetableOpts ct;
    auto *codetable = app.add_subcommand("codetable", "Dump all code states as CSV");
    codetable->add_option("--n", ct.n, "Code width (2, 4, 6 or 8)")->required();
    codetable->add_option("--out", ct.out, "Output file (default stdout)");
    codetable->add_flag("--pretty", ct.pretty, "Ket notation instead of CSV");

    EncodeOpts en;
    auto *encode = app.add_subcommand("encode", "Print the code state of one word");
    encode->add_option("--n", en.n, "Code width")->required();
    encode->add_option("--word", en.word, "Word as a bit string")->required();
    encode->add_flag("--local", en.local, "Encode by acting on the retained half only");
    encode->add_option("--out", en.out, "Output file (default stdout)");

    DecodeOpts de;
    auto *decode = app.add_subcommand("decode", "Decode a state written by 'encode'");
    decode->add_option("--n", de.n, "Code width")->required();
    decode->add_option("--in", de.in, "State CSV (basis,re,im)")->required();

    SwitchOpts sw;
    auto *swc = app.add_subcommand("switch", "Run packets through the switch");
    swc->add_option("--s1", sw.s1, "Source 1 bits");
    swc->add_option("--s2", sw.s2, "Source 2 bits");
    swc->add_option("--inputs", sw.inputs, "Comma-separated bits for every source");
    swc->add_option("--c", sw.c, "Commutation bit for two ports")->check(CLI::Range(0, 1));
    swc->add_option("--perm", sw.perm, "Destination port of each source, 1-based");
    swc->add_option("--d", sw.d, "Processing delay in qubits")->check(CLI::Range(1, 4));
    swc->add_option("--seed", sw.seed, "Measurement seed");
    swc->add_option("--transcript", sw.transcript, "Write the gate transcript CSV here");

    NosignalOpts ns;
    auto *nosignal = app.add_subcommand("nosignal", "Compare sent states for C=0 and C=1");
    nosignal->add_option("--d", ns.d, "Processing delay in qubits")->check(CLI::Range(1, 2));
    nosignal->add_option("--slot", ns.slot, "Probe slot (default: every slot before the decision)");
    nosignal->add_option("--s1", ns.s1, "Source 1 bits");
    nosignal->add_option("--s2", ns.s2, "Source 2 bits");

    NetsimOpts nt;
    auto *net = app.add_subcommand("netsim", "Evaluate network delay scenarios");
    net->add_option("--scenario", nt.scenario, "Scenario file")->required();
    net->add_option("--out", nt.out, "Output CSV (default stdout)");
    net->add_option("--log", nt.log, "Event log CSV");

    std::string suite;
    auto *ver = app.add_subcommand("verify", "Run built-in acceptance checks");
    ver->add_option("suite", suite, "table1 | orthonormal | nosignal | formulas | routing | all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*codetable) {
            return cmd_codetable(ct);
        }
        if (*encode) {
            return cmd_encode(en);
        }
        if (*decode) {
            return cmd_decode(de);
        }
        if (*swc) {
            return cmd_switch(sw);
        }
        if (*nosignal) {
            return cmd_nosignal(ns);
        }
        if (*net) {
            return cmd_netsim(nt);
        }
        if (*ver) {
            return cmd_verify(suite);
        }
    } catch (const ContentionError &e) {
        std::cerr << "delcom: contention: " << e.what() << '\n';
        return kExitContention;
    } catch (const std::exception &e) {
        std::cerr << "delcom: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
