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
 * Generalized superdense code over n = 2d qubits.
 *
 * A code state for word (i, j) is
 *
 *     (1/sqrt(2^d)) sum_k (-1)^(i.k) |k>|j xor k>
 *
 * where the first d qubits (|k>) leave the switch before the routing decision
 * and the last d qubits are retained. i.k is the bitwise inner product mod 2.
 * For d = 1 the four code states are the Bell states.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "delcom/statevector.hpp"

namespace delcom::codec {

/// Code width n (even, 2..8) and delay width d = n/2.
class CodeParams {
  public:
    static constexpr unsigned kMaxWidth = 8;

    explicit CodeParams(unsigned n);

    [[nodiscard]] unsigned n() const noexcept { return n_; }
    [[nodiscard]] unsigned d() const noexcept { return n_ / 2; }
    [[nodiscard]] std::uint32_t num_words() const noexcept { return 1U << n_; }

    friend bool operator==(CodeParams, CodeParams) = default;

  private:
    unsigned n_;
};

/// Phase half `i_bits` and flip half `j_bits`, each d bits wide. The first
/// data qubit of a block is the most significant bit of i_bits.
struct CodeWord {
    std::uint32_t i_bits = 0;
    std::uint32_t j_bits = 0;

    /// Split an n-bit value "i j" into its halves.
    static CodeWord from_value(CodeParams params, std::uint32_t value);
    static CodeWord from_string(CodeParams params, const std::string &bits);

    [[nodiscard]] std::uint32_t value(CodeParams params) const;
    [[nodiscard]] std::string to_string(CodeParams params) const;

    friend bool operator==(const CodeWord &, const CodeWord &) = default;
};

/// An n-qubit code register. Qubits 0..d-1 travel, d..n-1 stay behind.
struct EncodedPair {
    CodeParams params;
    StateVector state;

    [[nodiscard]] QubitIndex transmitted(unsigned m) const { return QubitIndex{m}; }
    [[nodiscard]] QubitIndex retained(unsigned m) const {
        return QubitIndex{params.d() + m};
    }
};

struct DecodeReport {
    CodeWord word;
    /// |<code(word)|state>|^2
    double fidelity = 0.0;
};

class NotACodeState : public std::runtime_error {
  public:
    NotACodeState(DecodeReport nearest, const std::string &what)
        : std::runtime_error(what), nearest_(nearest) {}
    [[nodiscard]] const DecodeReport &nearest() const noexcept { return nearest_; }

  private:
    DecodeReport nearest_;
};

/// (1/sqrt(2^d)) sum_i |i>|i>
[[nodiscard]] EncodedPair make_ancilla(CodeParams params);

/// Direct evaluation of the code-state formula.
[[nodiscard]] EncodedPair encode_analytic(CodeParams params, CodeWord word);

/// Encodes by acting on the retained half only: Z on retained qubit m when
/// bit m of i is set, then X when bit m of j is set. Throws
/// std::invalid_argument if `ancilla` is not the fresh ancilla state.
[[nodiscard]] EncodedPair encode_local(EncodedPair ancilla, CodeWord word);

/// Transversal CNOTs (transmitted m -> retained m), Hadamards on the
/// transmitted half, then read out. Ties go to the lowest word.
[[nodiscard]] DecodeReport decode_nearest(const EncodedPair &pair);

/// As decode_nearest, but throws NotACodeState unless fidelity >= 1 - 1e-10.
[[nodiscard]] CodeWord decode(const EncodedPair &pair);

struct CodeTerm {
    std::uint64_t basis;
    int sign;
};

struct CodeTableRow {
    CodeWord word;
    std::vector<CodeTerm> terms;
};

/// All 2^n code states with their nonzero terms, words in ascending order,
/// terms in ascending basis order. Every amplitude is sign / sqrt(2^d).
[[nodiscard]] std::vector<CodeTableRow> code_table(CodeParams params);

/// "1/sqrt(2)", "1/2", "1/sqrt(8)", "1/4"
[[nodiscard]] std::string magnitude_label(CodeParams params);

/// CSV with header `word,basis,sign,magnitude`, one line per nonzero term.
void write_code_table_csv(std::ostream &out, CodeParams params);

/// Ket notation, e.g. `0110: (|0010> - |0111> + |1000> - |1101>)/2`.
void write_code_table_pretty(std::ostream &out, CodeParams params);

[[nodiscard]] std::string bit_string(std::uint64_t value, unsigned width);

} // namespace delcom::codec
