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
#include "delcom/codec.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

namespace delcom::codec {

namespace {
int parity(std::uint32_t x) { return std::popcount(x) & 1; }

std::string denominator(CodeParams params) {
    const unsigned d = params.d();
    if (d % 2 == 0) {
        return std::to_string(1U << (d / 2));
    }
    return "sqrt(" + std::to_string(1U << d) + ")";
}
} // namespace

CodeParams::CodeParams(unsigned n) : n_(n) {
    if (n < 2 || n > kMaxWidth || n % 2 != 0) {
        throw std::invalid_argument("code width must be even and in 2.." +
                                    std::to_string(kMaxWidth) + ", got " +
                                    std::to_string(n));
    }
}

CodeWord CodeWord::from_value(CodeParams params, std::uint32_t value) {
    if (value >= params.num_words()) {
        throw std::out_of_range("code word " + std::to_string(value) +
                                " does not fit in " + std::to_string(params.n()) +
                                " bits");
    }
    const std::uint32_t low = (1U << params.d()) - 1;
    return {value >> params.d(), value & low};
}

CodeWord CodeWord::from_string(CodeParams params, const std::string &bits) {
    if (bits.size() != params.n()) {
        throw std::invalid_argument("code word '" + bits + "' must have " +
                                    std::to_string(params.n()) + " bits");
    }
    std::uint32_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("code word '" + bits + "' is not binary");
        }
        v = (v << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return from_value(params, v);
}

std::uint32_t CodeWord::value(CodeParams params) const {
    const std::uint32_t limit = 1U << params.d();
    if (i_bits >= limit || j_bits >= limit) {
        throw std::out_of_range("code word half exceeds " +
                                std::to_string(params.d()) + " bits");
    }
    return (i_bits << params.d()) | j_bits;
}

std::string CodeWord::to_string(CodeParams params) const {
    return bit_string(value(params), params.n());
}

std::string bit_string(std::uint64_t value, unsigned width) {
    std::string s(width, '0');
    for (unsigned b = 0; b < width; ++b) {
        if ((value >> (width - 1 - b)) & 1U) {
            s[b] = '1';
        }
    }
    return s;
}

EncodedPair make_ancilla(CodeParams params) {
    return encode_analytic(params, CodeWord{});
}

EncodedPair encode_analytic(CodeParams params, CodeWord word) {
    (void)word.value(params);
    const unsigned d = params.d();
    const double amp = 1.0 / std::sqrt(static_cast<double>(1U << d));
    std::vector<Amplitude> amps(std::size_t{1} << params.n());
    for (std::uint32_t k = 0; k < (1U << d); ++k) {
        const std::uint64_t index = (std::uint64_t{k} << d) | (word.j_bits ^ k);
        amps[index] = parity(word.i_bits & k) ? -amp : amp;
    }
    return {params, StateVector::from_amplitudes(std::move(amps))};
}

EncodedPair encode_local(EncodedPair ancilla, CodeWord word) {
    const CodeParams params = ancilla.params;
    (void)word.value(params);
    if (fidelity(ancilla.state, make_ancilla(params).state) < 1.0 - kCircuitTol) {
        throw std::invalid_argument("encode_local needs a fresh ancilla register");
    }
    const unsigned d = params.d();
    for (unsigned m = 0; m < d; ++m) {
        if ((word.i_bits >> (d - 1 - m)) & 1U) {
            ancilla.state.pauli_z(ancilla.retained(m));
        }
    }
    for (unsigned m = 0; m < d; ++m) {
        if ((word.j_bits >> (d - 1 - m)) & 1U) {
            ancilla.state.pauli_x(ancilla.retained(m));
        }
    }
    return ancilla;
}

DecodeReport decode_nearest(const EncodedPair &pair) {
    const CodeParams params = pair.params;
    if (pair.state.num_qubits() != params.n()) {
        throw std::invalid_argument("register width does not match code width");
    }
    StateVector s = pair.state;
    for (unsigned m = 0; m < params.d(); ++m) {
        s.cnot(pair.transmitted(m), pair.retained(m));
        s.hadamard(pair.transmitted(m));
    }
    std::uint32_t best = 0;
    double best_p = std::norm(s[0]);
    for (std::uint32_t x = 1; x < params.num_words(); ++x) {
        const double p = std::norm(s[x]);
        if (p > best_p + kExactTol) {
            best = x;
            best_p = p;
        }
    }
    return {CodeWord::from_value(params, best), best_p};
}

CodeWord decode(const EncodedPair &pair) {
    const DecodeReport report = decode_nearest(pair);
    if (report.fidelity < 1.0 - kCircuitTol) {
        std::ostringstream msg;
        msg << "not a code state; nearest word "
            << report.word.to_string(pair.params) << " with infidelity "
            << 1.0 - report.fidelity;
        throw NotACodeState(report, msg.str());
    }
    return report.word;
}

std::vector<CodeTableRow> code_table(CodeParams params) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(1U << params.d()));
    std::vector<CodeTableRow> rows;
    rows.reserve(params.num_words());
    for (std::uint32_t w = 0; w < params.num_words(); ++w) {
        const CodeWord word = CodeWord::from_value(params, w);
        const EncodedPair code = encode_analytic(params, word);
        CodeTableRow row{word, {}};
        for (std::uint64_t x = 0; x < code.state.size(); ++x) {
            const Amplitude a = code.state[x];
            if (std::abs(a) < kExactTol) {
                continue;
            }
            if (std::abs(std::abs(a.real()) - amp) > kExactTol ||
                std::abs(a.imag()) > kExactTol) {
                throw std::logic_error("code amplitude is not +-1/sqrt(2^d)");
            }
            row.terms.push_back({x, a.real() > 0 ? 1 : -1});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string magnitude_label(CodeParams params) {
    return "1/" + denominator(params);
}

void write_code_table_csv(std::ostream &out, CodeParams params) {
    const std::string mag = magnitude_label(params);
    out << "word,basis,sign,magnitude\n";
    for (const auto &row : code_table(params)) {
        const std::string word = row.word.to_string(params);
        for (const auto &t : row.terms) {
            out << word << ',' << bit_string(t.basis, params.n()) << ','
                << (t.sign > 0 ? '+' : '-') << ',' << mag << '\n';
        }
    }
}

void write_code_table_pretty(std::ostream &out, CodeParams params) {
    const std::string den = denominator(params);
    for (const auto &row : code_table(params)) {
        out << row.word.to_string(params) << ": (";
        bool first = true;
        for (const auto &t : row.terms) {
            if (first) {
                if (t.sign < 0) {
                    out << '-';
                }
            } else {
                out << (t.sign > 0 ? " + " : " - ");
            }
            out << '|' << bit_string(t.basis, params.n()) << '>';
            first = false;
        }
        out << ")/" << den << '\n';
    }
}

} // namespace delcom::codec
