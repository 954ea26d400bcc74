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

#ifndef CPH_TABLEAU_H
#define CPH_TABLEAU_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cph/bits.h"
#include "cph/pauli.h"

namespace cph {

/// A problem instance: r signed Pauli words on n qubits, plus free-form
/// metadata lines (written back out as '#' comments).
struct Instance {
    std::size_t num_qubits = 0;
    std::vector<PauliWord> generators;
    std::vector<std::string> metadata;

    /// Throws std::invalid_argument on an empty generator list or a length
    /// mismatch. Commutation is checked separately by validate_commuting.
    void check_shape() const;
};

/// Every anticommuting pair (j, k), j < k, 0-based. Empty iff the promise holds.
std::vector<std::pair<std::size_t, std::size_t>> validate_commuting(const Instance &inst);

class InstanceParseError : public std::invalid_argument {
   public:
    InstanceParseError(std::size_t line, const std::string &message)
        : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// Reads the line-oriented instance format:
///
///     # comment
///     n <qubits>
///     +XXI
///     -ZIZ
///
/// Comment lines may appear anywhere; blank lines are ignored.
Instance read_instance(std::istream &in);
Instance parse_instance(const std::string &text);
void write_instance(std::ostream &out, const Instance &inst);
std::string format_instance(const Instance &inst);

/// The r x (2n+1) matrix [R | A | B] of a generator set, together with an
/// r x r history matrix over GF(2). Row a of the history selects the
/// original generators whose product is the current row a.
class Tableau {
   public:
    explicit Tableau(const std::vector<PauliWord> &words);
    static Tableau from_instance(const Instance &inst) { return Tableau(inst.generators); }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_rows() const { return phases_.size(); }

    bool phase(std::size_t a) const { return phases_.get(a); }
    bool x(std::size_t a, std::size_t q) const { return xs_.get(a, q); }
    bool z(std::size_t a, std::size_t q) const { return zs_.get(a, q); }

    PauliWord word(std::size_t a) const;
    std::vector<PauliWord> words() const;

    /// Row k <- row j * row k (phase included); history row k ^= history row j.
    /// Throws PromiseViolation if the two rows anticommute.
    void row_mult(std::size_t j, std::size_t k);
    void swap_rows(std::size_t j, std::size_t k);

    bool row_symplectic_zero(std::size_t a) const { return xs_.row_is_zero(a) && zs_.row_is_zero(a); }
    bool row_is_minus_identity(std::size_t a) const { return phases_.get(a) && row_symplectic_zero(a); }
    std::optional<std::size_t> find_minus_identity() const;

    /// Original generator indices (0-based, ascending) whose product is row a.
    std::vector<std::size_t> history_indices(std::size_t a) const;
    const BitMatrix &history() const { return history_; }

    /// Count of row_mult calls plus non-trivial swaps so far.
    std::size_t row_op_count() const { return row_ops_; }

    // Raw storage, used by the gate engine.
    BitVector &phases() { return phases_; }
    BitMatrix &xs() { return xs_; }
    BitMatrix &zs() { return zs_; }
    const BitVector &phases() const { return phases_; }
    const BitMatrix &xs() const { return xs_; }
    const BitMatrix &zs() const { return zs_; }

    bool operator==(const Tableau &other) const;

   private:
    std::size_t num_qubits_ = 0;
    BitVector phases_;
    BitMatrix xs_;
    BitMatrix zs_;
    BitMatrix history_;
    std::size_t row_ops_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Tableau &t);

}  // namespace cph

#endif
