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

#ifndef CPH_SOLVER_H
#define CPH_SOLVER_H

#include <cstddef>
#include <optional>
#include <vector>

#include "cph/clifford.h"
#include "cph/pauli.h"
#include "cph/tableau.h"

namespace cph {

enum class Answer { Yes, No };

/// Outcome of a solve.
///
/// A YES carries n witness words: independent, pairwise commuting, and
/// generating a group that contains every input generator with sign +1.
/// Their joint +1 eigenspace is a single state. A NO carries a certificate:
/// 0-based indices of input generators whose product is exactly -I.
struct Verdict {
    Answer answer = Answer::Yes;
    std::size_t num_qubits = 0;
    std::size_t num_generators = 0;
    std::vector<PauliWord> witness;
    std::vector<std::size_t> certificate;
    /// Rank of the X block after the first elimination, if reached.
    std::optional<std::size_t> k;
    /// Rank after the final elimination, if reached.
    std::optional<std::size_t> k_prime;
    std::size_t gate_count = 0;
    std::size_t row_op_count = 0;

    bool yes() const { return answer == Answer::Yes; }
    bool operator==(const Verdict &other) const = default;
};

struct EliminationResult {
    std::size_t rank = 0;
    /// Set when a row became -I during elimination; the tableau is left as
    /// it was at that moment.
    std::optional<std::size_t> minus_identity_row;
};

/// Brings the X block restricted to columns [0, num_cols) to [I 0; 0 0]
/// form, I of size rank.
///
/// Rows are reduced with row_mult/swap_rows (pivot: leftmost column, then
/// lowest row index at or below the current pivot row). Pivot columns are
/// then gathered to the front by SWAP composites and the remaining set bits
/// of the pivot rows are cleared by CX(pivot, column). Every gate is applied
/// to `t` and appended to `circuit`. Rows outside [0, num_cols) are only
/// guaranteed to stay clear when the caller's tableau shape implies it.
EliminationResult gauss_x_block(Tableau &t, CliffordCircuit &circuit, std::size_t num_cols);

/// Throws PromiseViolation if any row at or below k has a Z bit in the first
/// k columns. Only meaningful after gauss_x_block on all n columns.
void check_b2_zero(const Tableau &t, std::size_t k);

/// Clears the k x k Z block of the first k rows, which must be symmetric
/// (PromiseViolation otherwise): S(i) for each set diagonal entry and
/// CZ(i, j) for each set pair above the diagonal. Returns the gates, which
/// have also been applied.
CliffordCircuit clear_b1(Tableau &t, std::size_t k);

/// Applies H to qubits k..n-1 and returns those gates.
CliffordCircuit hadamard_tail(Tableau &t, std::size_t k);

/// Full reduction pipeline. Throws PromiseViolation if the generators do not
/// pairwise commute and std::invalid_argument if the instance is malformed.
Verdict decide(const Instance &inst);

/// Independent decision route: row reduction of all 2n symplectic columns
/// with no gates. A NO carries a certificate; a YES carries no witness.
Verdict kernel_decide(const Instance &inst);

/// Maps the final-frame generators (-1)^R X_a for a < k_prime and +Z_a for
/// the remaining qubits back through the inverse of `circuit`.
std::vector<PauliWord> extract_witness(const Tableau &final_frame, std::size_t k_prime,
                                       const CliffordCircuit &circuit);

/// True iff `certificate` names distinct, in-range, pairwise commuting
/// generators whose product is exactly -I.
bool verify_certificate(const Instance &inst, const std::vector<std::size_t> &certificate);

/// True iff `witness` is n independent pairwise-commuting words on n qubits
/// and every input generator is a +1 product of them.
bool verify_witness(const Instance &inst, const std::vector<PauliWord> &witness);

}  // namespace cph

#endif
