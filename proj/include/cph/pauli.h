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

#ifndef CPH_PAULI_H
#define CPH_PAULI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cph/bits.h"

namespace cph {

/// Raised when the commuting promise is broken: two words that were required
/// to commute do not.
class PromiseViolation : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Exponent of i picked up when the single-qubit Paulis P(x1,z1) and
/// P(x2,z2) are multiplied in that order: P1 P2 = i^g P(x1^x2, z1^z2).
///
///   I * anything -> 0
///   Y * P2       -> z2 - x2
///   X * P2       -> z2 (2 x2 - 1)
///   Z * P2       -> x2 (1 - 2 z2)
constexpr int g(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return int(z2) * (2 * int(x2) - 1);
    }
    return int(x2) * (1 - 2 * int(z2));
}

/// Sum over qubits of g(x1[q], z1[q], x2[q], z2[q]), evaluated 64 qubits at a
/// time. Equal to the plain per-qubit loop over g; the spans must have equal
/// length and clear padding.
int packed_g_sum(std::span<const Word> x1, std::span<const Word> z1, std::span<const Word> x2,
                 std::span<const Word> z2);

/// A Hermitian Pauli operator (-1)^phase * P(x_1,z_1) (x) ... (x) P(x_n,z_n).
///
/// Only the signs +1 and -1 are representable, so every word squares to the
/// identity. Values are immutable once built.
class PauliWord {
   public:
    PauliWord() = default;
    /// The +identity on n qubits.
    explicit PauliWord(std::size_t n) : phase_(false), x_(n), z_(n) {}
    PauliWord(bool phase, BitVector x, BitVector z);

    std::size_t num_qubits() const { return x_.size(); }
    bool phase() const { return phase_; }
    const BitVector &x() const { return x_; }
    const BitVector &z() const { return z_; }

    /// 'I', 'X', 'Y' or 'Z' for qubit q.
    char letter(std::size_t q) const;
    bool is_identity_up_to_sign() const { return x_.none() && z_.none(); }
    bool is_minus_identity() const { return phase_ && is_identity_up_to_sign(); }
    std::size_t weight() const;

    PauliWord negated() const { return PauliWord(!phase_, x_, z_); }

    bool operator==(const PauliWord &other) const = default;

   private:
    bool phase_ = false;
    BitVector x_;
    BitVector z_;
};

/// Symplectic inner product mod 2; false iff the words commute.
bool symplectic_inner(const PauliWord &a, const PauliWord &b);

/// Product a*b of two commuting words. Throws PromiseViolation if they
/// anticommute and std::invalid_argument on a length mismatch.
PauliWord multiply(const PauliWord &a, const PauliWord &b);

/// Parses `sign letter{n}` with sign in {+,-} and letters in {I,X,Y,Z}.
PauliWord parse_pauli(std::string_view text, std::size_t n);
/// Same grammar, with n taken from the text.
PauliWord parse_pauli(std::string_view text);

std::string format_pauli(const PauliWord &w);
std::ostream &operator<<(std::ostream &out, const PauliWord &w);

}  // namespace cph

#endif
