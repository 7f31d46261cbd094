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
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "delcom/codec.hpp"
#include "delcom/density_matrix.hpp"

using namespace delcom;
using namespace delcom::codec;
using Catch::Approx;

namespace {
/// Sparse expectation: basis label -> sign, common magnitude.
void check_state(const StateVector &s, const std::map<std::string, int> &terms,
                 double magnitude, double tol = kExactTol) {
    const auto n = static_cast<unsigned>(s.num_qubits());
    for (std::uint64_t x = 0; x < s.size(); ++x) {
        const auto it = terms.find(bit_string(x, n));
        const double expected = it == terms.end() ? 0.0 : it->second * magnitude;
        INFO("basis " << bit_string(x, n));
        CHECK(std::abs(s[x] - Amplitude{expected}) < tol);
    }
}

const double kRoot2 = 1.0 / std::sqrt(2.0);
} // namespace

TEST_CASE("code parameters", "[codec]") {
    CHECK(CodeParams{4}.d() == 2);
    CHECK(CodeParams{8}.num_words() == 256);
    CHECK_THROWS_AS(CodeParams{3}, std::invalid_argument);
    CHECK_THROWS_AS(CodeParams{0}, std::invalid_argument);
    CHECK_THROWS_AS(CodeParams{10}, std::invalid_argument);

    const CodeParams p{4};
    const auto w = CodeWord::from_string(p, "0110");
    CHECK(w.i_bits == 0b01);
    CHECK(w.j_bits == 0b10);
    CHECK(w.to_string(p) == "0110");
    CHECK_THROWS_AS(CodeWord::from_value(p, 16), std::out_of_range);
    CHECK_THROWS_AS(CodeWord::from_string(p, "011"), std::invalid_argument);
    CHECK_THROWS_AS(CodeWord::from_string(p, "01a0"), std::invalid_argument);
}

TEST_CASE("ancilla state", "[codec]") {
    check_state(make_ancilla(CodeParams{2}).state, {{"00", 1}, {"11", 1}}, kRoot2);
    check_state(make_ancilla(CodeParams{4}).state,
                {{"0000", 1}, {"0101", 1}, {"1010", 1}, {"1111", 1}}, 0.5);

    // Direct evaluation of sum_i |i>|i> / sqrt(8).
    std::map<std::string, int> pairs;
    for (unsigned i = 0; i < 8; ++i) {
        pairs[bit_string(i, 3) + bit_string(i, 3)] = 1;
    }
    const auto a6 = make_ancilla(CodeParams{6});
    check_state(a6.state, pairs, 1.0 / std::sqrt(8.0));
    CHECK(a6.state.norm() == Approx(1.0));
}

TEST_CASE("analytic encoding reproduces the published states", "[codec]") {
    check_state(encode_analytic(CodeParams{2}, CodeWord{1, 0}).state, {{"00", 1}, {"11", -1}},
                kRoot2);
    const CodeParams p4{4};
    check_state(encode_analytic(p4, CodeWord::from_string(p4, "0110")).state,
                {{"0010", 1}, {"0111", -1}, {"1000", 1}, {"1101", -1}}, 0.5);
    check_state(encode_analytic(p4, CodeWord::from_string(p4, "1011")).state,
                {{"0011", 1}, {"0110", 1}, {"1001", -1}, {"1100", -1}}, 0.5);
    CHECK_THROWS_AS(encode_analytic(p4, CodeWord{4, 0}), std::out_of_range);
}

TEST_CASE("two-qubit code is the Bell basis, |ab> -> (|0b> + (-1)^a |1 b^1>)/sqrt2",
          "[codec]") {
    const CodeParams p{2};
    for (unsigned a = 0; a < 2; ++a) {
        for (unsigned b = 0; b < 2; ++b) {
            const auto s = encode_analytic(p, CodeWord{a, b}).state;
            const std::string zero_branch = "0" + std::to_string(b);
            const std::string one_branch = "1" + std::to_string(b ^ 1U);
            check_state(s, {{zero_branch, 1}, {one_branch, a ? -1 : 1}}, kRoot2);
        }
    }
}

TEST_CASE("local encoding touches only the retained half", "[codec]") {
    const CodeParams p2{2};
    check_state(encode_local(make_ancilla(p2), CodeWord{0, 1}).state, {{"01", 1}, {"10", 1}},
                kRoot2);
    CHECK(max_abs_diff(encode_local(make_ancilla(p2), CodeWord{0, 0}).state,
                       make_ancilla(p2).state) == 0.0);

    const CodeParams p4{4};
    const auto word = CodeWord::from_string(p4, "1100");
    const auto local = encode_local(make_ancilla(p4), word);
    const auto table_row = encode_analytic(p4, word);
    CHECK(std::abs(std::abs(inner_product(local.state, table_row.state)) - 1.0) < kExactTol);
    check_state(local.state, {{"0000", 1}, {"0101", -1}, {"1010", -1}, {"1111", 1}}, 0.5);

    auto not_fresh = make_ancilla(p4);
    not_fresh.state.hadamard(QubitIndex{0});
    CHECK_THROWS_AS(encode_local(not_fresh, word), std::invalid_argument);
}

TEST_CASE("decoding", "[codec]") {
    CHECK(decode(make_ancilla(CodeParams{2})) == CodeWord{0, 0});

    const CodeParams p4{4};
    for (std::uint32_t w = 0; w < 16; ++w) {
        const auto word = CodeWord::from_value(p4, w);
        CHECK(decode(encode_analytic(p4, word)) == word);
    }
    const CodeParams p6{6};
    for (std::uint32_t w = 0; w < 64; ++w) {
        const auto word = CodeWord::from_value(p6, w);
        const auto report = decode_nearest(encode_analytic(p6, word));
        CHECK(report.word == word);
        CHECK(report.fidelity >= 1.0 - kCircuitTol);
    }

    SECTION("non-code state reports the nearest word") {
        // cos(t)|code 0110> + sin(t)|code 0011>, mostly the first
        const double t = 0.3;
        const auto a = encode_analytic(p4, CodeWord::from_string(p4, "0110")).state;
        const auto b = encode_analytic(p4, CodeWord::from_string(p4, "0011")).state;
        std::vector<Amplitude> mix(16);
        for (std::size_t x = 0; x < 16; ++x) {
            mix[x] = std::cos(t) * a[x] + std::sin(t) * b[x];
        }
        const EncodedPair pair{p4, StateVector::from_amplitudes(mix)};
        try {
            (void)decode(pair);
            FAIL("expected NotACodeState");
        } catch (const NotACodeState &e) {
            CHECK(e.nearest().word == CodeWord::from_string(p4, "0110"));
            CHECK(e.nearest().fidelity == Approx(std::cos(t) * std::cos(t)));
        }
    }
    SECTION("ties go to the lowest word") {
        const auto a = encode_analytic(p4, CodeWord::from_string(p4, "1001")).state;
        const auto b = encode_analytic(p4, CodeWord::from_string(p4, "0101")).state;
        std::vector<Amplitude> mix(16);
        for (std::size_t x = 0; x < 16; ++x) {
            mix[x] = kRoot2 * (a[x] + b[x]);
        }
        const auto report = decode_nearest({p4, StateVector::from_amplitudes(mix)});
        CHECK(report.word == CodeWord::from_string(p4, "0101"));
        CHECK(report.fidelity == Approx(0.5));
    }
}

TEST_CASE("code table", "[codec]") {
    const auto t2 = code_table(CodeParams{2});
    REQUIRE(t2.size() == 4);
    CHECK(t2[2].word == CodeWord{1, 0});
    CHECK(t2[2].terms[1].basis == 0b11);
    CHECK(t2[2].terms[1].sign == -1);

    const auto t6 = code_table(CodeParams{6});
    REQUIRE(t6.size() == 64);
    for (const auto &row : t6) {
        CHECK(row.terms.size() == 8);
    }
    CHECK(magnitude_label(CodeParams{2}) == "1/sqrt(2)");
    CHECK(magnitude_label(CodeParams{4}) == "1/2");
    CHECK(magnitude_label(CodeParams{6}) == "1/sqrt(8)");
    CHECK(magnitude_label(CodeParams{8}) == "1/4");

    std::ostringstream pretty;
    write_code_table_pretty(pretty, CodeParams{2});
    CHECK(pretty.str() == "00: (|00> + |11>)/sqrt(2)\n"
                          "01: (|01> + |10>)/sqrt(2)\n"
                          "10: (|00> - |11>)/sqrt(2)\n"
                          "11: (|01> - |10>)/sqrt(2)\n");
}

// ---------------------------------------------------------------------------
// Properties, exhaustive over every word.

TEST_CASE("code states form an orthonormal basis", "[codec][property]") {
    for (unsigned n : {2U, 4U, 6U}) {
        const CodeParams p{n};
        double worst = 0.0;
        for (std::uint32_t a = 0; a < p.num_words(); ++a) {
            const auto sa = encode_analytic(p, CodeWord::from_value(p, a)).state;
            for (std::uint32_t b = 0; b < p.num_words(); ++b) {
                const auto sb = encode_analytic(p, CodeWord::from_value(p, b)).state;
                worst = std::max(worst, std::abs(inner_product(sa, sb) - (a == b ? 1.0 : 0.0)));
            }
        }
        INFO("n=" << n);
        CHECK(worst < kCircuitTol);
    }
}

TEST_CASE("local and analytic encodings agree", "[codec][property]") {
    for (unsigned n : {2U, 4U, 6U, 8U}) {
        const CodeParams p{n};
        for (std::uint32_t w = 0; w < p.num_words(); ++w) {
            const auto word = CodeWord::from_value(p, w);
            const auto local = encode_local(make_ancilla(p), word).state;
            const auto analytic = encode_analytic(p, word).state;
            CHECK(std::abs(std::abs(inner_product(local, analytic)) - 1.0) < kExactTol);
        }
    }
}

TEST_CASE("phase half flips signs, flip half permutes terms", "[codec][property]") {
    for (unsigned n : {2U, 4U, 6U}) {
        const CodeParams p{n};
        const auto table = code_table(p);
        for (const auto &row : table) {
            for (unsigned bit = 0; bit < p.d(); ++bit) {
                const auto &phase_flipped =
                    table[CodeWord{row.word.i_bits ^ (1U << bit), row.word.j_bits}.value(p)];
                const auto &bit_flipped =
                    table[CodeWord{row.word.i_bits, row.word.j_bits ^ (1U << bit)}.value(p)];
                bool same_support = true;
                bool some_sign_changed = false;
                for (std::size_t t = 0; t < row.terms.size(); ++t) {
                    same_support = same_support && phase_flipped.terms[t].basis == row.terms[t].basis;
                    some_sign_changed = some_sign_changed || phase_flipped.terms[t].sign != row.terms[t].sign;
                }
                CHECK(same_support);
                CHECK(some_sign_changed);

                // Flipping bit `bit` of j toggles that bit of every retained label
                // and keeps the sign attached to each transmitted label k.
                std::map<std::uint64_t, std::pair<std::uint64_t, int>> by_k;
                for (const auto &term : row.terms) {
                    by_k[term.basis >> p.d()] = {term.basis, term.sign};
                }
                for (const auto &term : bit_flipped.terms) {
                    const auto &[basis, sign] = by_k.at(term.basis >> p.d());
                    CHECK(term.basis == (basis ^ (1U << bit)));
                    CHECK(term.sign == sign);
                }
            }
        }
    }
}

TEST_CASE("transmitted half carries no information about the word", "[codec][property]") {
    for (unsigned n : {2U, 4U, 6U}) {
        const CodeParams p{n};
        std::vector<QubitIndex> sent;
        for (unsigned m = 0; m < p.d(); ++m) {
            sent.push_back(QubitIndex{m});
        }
        const auto mixed = DensityMatrix::maximally_mixed(p.d());
        for (std::uint32_t w = 0; w < p.num_words(); ++w) {
            const auto s = encode_analytic(p, CodeWord::from_value(p, w)).state;
            CHECK(max_abs_diff(partial_trace(s, sent), mixed) < kCircuitTol);
        }
    }
}
