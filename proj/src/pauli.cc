// Copyright 2026 The cph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cph/pauli.h"

#include <ostream>

namespace cph {

int packed_g_sum(std::span<const Word> x1, std::span<const Word> z1, std::span<const Word> x2,
                 std::span<const Word> z2) {
    int plus = 0;
    int minus = 0;
    for (std::size_t k = 0; k < x1.size(); k++) {
        Word a_x = x1[k] & ~z1[k];
        Word a_y = x1[k] & z1[k];
        Word a_z = ~x1[k] & z1[k];
        Word b_x = x2[k] & ~z2[k];
        Word b_y = x2[k] & z2[k];
        Word b_z = ~x2[k] & z2[k];
        plus += std::popcount((a_x & b_y) | (a_y & b_z) | (a_z & b_x));
        minus += std::popcount((a_x & b_z) | (a_y & b_x) | (a_z & b_y));
    }
    return plus - minus;
}

PauliWord::PauliWord(bool phase, BitVector x, BitVector z) : phase_(phase), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliWord: x and z lengths differ");
    }
}

char PauliWord::letter(std::size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[int(x_.get(q)) | (int(z_.get(q)) << 1)];
}

std::size_t PauliWord::weight() const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < x_.words().size(); k++) {
        total += static_cast<std::size_t>(std::popcount(x_.words()[k] | z_.words()[k]));
    }
    return total;
}

bool symplectic_inner(const PauliWord &a, const PauliWord &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("symplectic_inner: words act on different qubit counts");
    }
    Word acc = 0;
    auto ax = a.x().words();
    auto az = a.z().words();
    auto bx = b.x().words();
    auto bz = b.z().words();
    for (std::size_t k = 0; k < ax.size(); k++) {
        acc ^= (ax[k] & bz[k]) ^ (bx[k] & az[k]);
    }
    return std::popcount(acc) & 1;
}

PauliWord multiply(const PauliWord &a, const PauliWord &b) {
    std::size_t n = a.num_qubits();
    if (b.num_qubits() != n) {
        throw std::invalid_argument("multiply: words act on different qubit counts");
    }
    int t = 2 * int(a.phase()) + 2 * int(b.phase());
    for (std::size_t q = 0; q < n; q++) {
        t += g(a.x().get(q), a.z().get(q), b.x().get(q), b.z().get(q));
    }
    int m = ((t % 4) + 4) % 4;
    if (m & 1) {
        throw PromiseViolation("multiply: " + format_pauli(a) + " and " + format_pauli(b) + " anticommute");
    }
    return PauliWord(m == 2, a.x() ^ b.x(), a.z() ^ b.z());
}

PauliWord parse_pauli(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli word");
    }
    return parse_pauli(text, text.size() - 1);
}

PauliWord parse_pauli(std::string_view text, std::size_t n) {
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli word");
    }
    char sign = text.front();
    if (sign != '+' && sign != '-') {
        throw std::invalid_argument("Pauli word '" + std::string(text) + "' must start with '+' or '-'");
    }
    std::string_view body = text.substr(1);
    if (!body.empty() && (body.front() == 'i' || body.front() == 'j')) {
        throw std::invalid_argument("Pauli word '" + std::string(text) +
                                    "' has an imaginary phase; only +1 and -1 are allowed");
    }
    if (body.size() != n) {
        throw std::invalid_argument("Pauli word '" + std::string(text) + "' has " + std::to_string(body.size()) +
                                    " letters, expected " + std::to_string(n));
    }
    BitVector x(n);
    BitVector z(n);
    for (std::size_t q = 0; q < n; q++) {
        switch (body[q]) {
            case 'I':
                break;
            case 'X':
                x.set(q, true);
                break;
            case 'Y':
                x.set(q, true);
                z.set(q, true);
                break;
            case 'Z':
                z.set(q, true);
                break;
            default:
                throw std::invalid_argument("Pauli word '" + std::string(text) + "' has bad letter '" +
                                            std::string(1, body[q]) + "' at position " + std::to_string(q + 1));
        }
    }
    return PauliWord(sign == '-', std::move(x), std::move(z));
}

std::string format_pauli(const PauliWord &w) {
    std::string out;
    out.reserve(w.num_qubits() + 1);
    out.push_back(w.phase() ? '-' : '+');
    for (std::size_t q = 0; q < w.num_qubits(); q++) {
        out.push_back(w.letter(q));
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const PauliWord &w) { return out << format_pauli(w); }

}  // namespace cph
