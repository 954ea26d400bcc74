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

#include "cph/solver.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cph {

namespace {

void require_promise(const Instance &inst) {
    inst.check_shape();
    auto bad = validate_commuting(inst);
    if (!bad.empty()) {
        throw PromiseViolation("generators " + std::to_string(bad.front().first + 1) + " and " +
                               std::to_string(bad.front().second + 1) + " anticommute");
    }
}

// Bit c of the 2n-wide symplectic row: X columns first, then Z columns.
bool symplectic_bit(const Tableau &t, std::size_t row, std::size_t c) {
    std::size_t n = t.num_qubits();
    return c < n ? t.x(row, c) : t.z(row, c - n);
}

Verdict no_verdict(Verdict v, const Tableau &t, std::size_t row, const CliffordCircuit &circuit) {
    v.answer = Answer::No;
    v.certificate = t.history_indices(row);
    v.gate_count = circuit.size();
    v.row_op_count = t.row_op_count();
    return v;
}

}  // namespace

EliminationResult gauss_x_block(Tableau &t, CliffordCircuit &circuit, std::size_t num_cols) {
    if (num_cols > t.num_qubits()) {
        throw std::out_of_range("gauss_x_block: column range exceeds qubit count");
    }
    const std::size_t rows = t.num_rows();
    EliminationResult result;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < num_cols && result.rank < rows; c++) {
        std::size_t p = result.rank;
        while (p < rows && !t.x(p, c)) {
            p++;
        }
        if (p == rows) {
            continue;
        }
        t.swap_rows(result.rank, p);
        for (std::size_t a = result.rank + 1; a < rows; a++) {
            if (!t.x(a, c)) {
                continue;
            }
            t.row_mult(result.rank, a);
            if (t.row_is_minus_identity(a)) {
                result.minus_identity_row = a;
                return result;
            }
        }
        pivots.push_back(c);
        result.rank++;
    }

    CliffordCircuit stage;
    std::vector<std::size_t> column_at(num_cols);
    std::iota(column_at.begin(), column_at.end(), std::size_t{0});
    for (std::size_t a = 0; a < pivots.size(); a++) {
        if (pivots[a] != a) {
            stage.swap(a, pivots[a]);
            std::swap(column_at[a], column_at[pivots[a]]);
        }
    }
    // After the swaps the pivot block is upper unitriangular. Columns are
    // cleared left to right, so column a is already e_a when CX(a, j) runs
    // and the gate only flips entry (a, j).
    for (std::size_t j = 0; j < num_cols; j++) {
        for (std::size_t a = 0; a < std::min(j, result.rank); a++) {
            if (t.x(a, column_at[j])) {
                stage.cx(a, j);
            }
        }
    }
    apply_circuit(t, stage);
    circuit.append(stage);
    return result;
}

void check_b2_zero(const Tableau &t, std::size_t k) {
    for (std::size_t a = k; a < t.num_rows(); a++) {
        for (std::size_t q = 0; q < k; q++) {
            if (t.z(a, q)) {
                throw PromiseViolation("row " + std::to_string(a + 1) + " has a Z component on pivot qubit " +
                                       std::to_string(q + 1) + "; the rows do not all commute");
            }
        }
    }
}

CliffordCircuit clear_b1(Tableau &t, std::size_t k) {
    if (k > t.num_rows() || k > t.num_qubits()) {
        throw std::out_of_range("clear_b1: k exceeds tableau shape");
    }
    CliffordCircuit gates;
    for (std::size_t i = 0; i < k; i++) {
        if (t.z(i, i)) {
            gates.s(i);
        }
        for (std::size_t j = i + 1; j < k; j++) {
            if (t.z(i, j) != t.z(j, i)) {
                throw PromiseViolation("Z block of the pivot rows is not symmetric at (" + std::to_string(i + 1) +
                                       ", " + std::to_string(j + 1) + "); the rows do not all commute");
            }
            if (t.z(i, j)) {
                gates.cz(i, j);
            }
        }
    }
    apply_circuit(t, gates);
    return gates;
}

CliffordCircuit hadamard_tail(Tableau &t, std::size_t k) {
    CliffordCircuit gates;
    for (std::size_t q = k; q < t.num_qubits(); q++) {
        gates.h(q);
    }
    apply_circuit(t, gates);
    return gates;
}

Verdict decide(const Instance &inst) {
    require_promise(inst);
    const std::size_t n = inst.num_qubits;
    Tableau t = Tableau::from_instance(inst);
    CliffordCircuit circuit;
    Verdict v;
    v.num_qubits = n;
    v.num_generators = inst.generators.size();

    if (auto row = t.find_minus_identity()) {
        return no_verdict(v, t, *row, circuit);
    }

    // M -> M1: X block to [I 0; 0 0].
    auto first = gauss_x_block(t, circuit, n);
    if (first.minus_identity_row) {
        return no_verdict(v, t, *first.minus_identity_row, circuit);
    }
    const std::size_t k = first.rank;
    v.k = k;
    check_b2_zero(t, k);

    // M1 -> M2: zero the symmetric Z block of the pivot rows. The X block of
    // those rows is untouched, so re-elimination finds the identity again.
    circuit.append(clear_b1(t, k));
    auto again = gauss_x_block(t, circuit, k);
    if (again.minus_identity_row) {
        return no_verdict(v, t, *again.minus_identity_row, circuit);
    }
    if (again.rank != k) {
        throw std::logic_error("decide: pivot block lost rank after clearing its Z block");
    }

    // M2 -> M3: only X components remain.
    circuit.append(hadamard_tail(t, k));

    // M3 -> M4.
    auto last = gauss_x_block(t, circuit, n);
    if (last.minus_identity_row) {
        return no_verdict(v, t, *last.minus_identity_row, circuit);
    }
    v.k_prime = last.rank;
    for (std::size_t a = last.rank; a < t.num_rows(); a++) {
        if (!t.row_symplectic_zero(a)) {
            throw std::logic_error("decide: final tableau has a non-trivial row below the pivots");
        }
        if (t.phase(a)) {
            return no_verdict(v, t, a, circuit);
        }
    }

    v.answer = Answer::Yes;
    v.witness = extract_witness(t, last.rank, circuit);
    v.gate_count = circuit.size();
    v.row_op_count = t.row_op_count();
    return v;
}

Verdict kernel_decide(const Instance &inst) {
    require_promise(inst);
    const std::size_t n = inst.num_qubits;
    Tableau t = Tableau::from_instance(inst);
    const CliffordCircuit no_gates;
    Verdict v;
    v.num_qubits = n;
    v.num_generators = inst.generators.size();

    if (auto row = t.find_minus_identity()) {
        return no_verdict(v, t, *row, no_gates);
    }
    const std::size_t rows = t.num_rows();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < 2 * n && rank < rows; c++) {
        std::size_t p = rank;
        while (p < rows && !symplectic_bit(t, p, c)) {
            p++;
        }
        if (p == rows) {
            continue;
        }
        t.swap_rows(rank, p);
        for (std::size_t a = rank + 1; a < rows; a++) {
            if (!symplectic_bit(t, a, c)) {
                continue;
            }
            t.row_mult(rank, a);
            if (t.row_is_minus_identity(a)) {
                return no_verdict(v, t, a, no_gates);
            }
        }
        rank++;
    }
    if (auto row = t.find_minus_identity()) {
        return no_verdict(v, t, *row, no_gates);
    }
    v.answer = Answer::Yes;
    v.row_op_count = t.row_op_count();
    return v;
}

std::vector<PauliWord> extract_witness(const Tableau &final_frame, std::size_t k_prime,
                                       const CliffordCircuit &circuit) {
    const std::size_t n = final_frame.num_qubits();
    if (k_prime > n || k_prime > final_frame.num_rows()) {
        throw std::out_of_range("extract_witness: rank exceeds tableau shape");
    }
    std::vector<PauliWord> frame;
    frame.reserve(n);
    for (std::size_t a = 0; a < n; a++) {
        BitVector x(n);
        BitVector z(n);
        bool sign = false;
        if (a < k_prime) {
            if (final_frame.row_is_minus_identity(a)) {
                throw std::invalid_argument("extract_witness: tableau contains -I");
            }
            x.set(a, true);
            sign = final_frame.phase(a);
        } else {
            z.set(a, true);
        }
        frame.emplace_back(sign, std::move(x), std::move(z));
    }
    Tableau w(frame);
    apply_circuit(w, invert(circuit));
    return w.words();
}

bool verify_certificate(const Instance &inst, const std::vector<std::size_t> &certificate) {
    if (certificate.empty()) {
        return false;
    }
    std::vector<std::size_t> sorted = certificate;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.back() >= inst.generators.size()) {
        return false;
    }
    for (std::size_t a = 0; a < sorted.size(); a++) {
        for (std::size_t b = a + 1; b < sorted.size(); b++) {
            if (symplectic_inner(inst.generators[sorted[a]], inst.generators[sorted[b]])) {
                return false;
            }
        }
    }
    PauliWord product(inst.num_qubits);
    for (std::size_t idx : sorted) {
        product = multiply(product, inst.generators[idx]);
    }
    return product.is_minus_identity();
}

bool verify_witness(const Instance &inst, const std::vector<PauliWord> &witness) {
    const std::size_t n = inst.num_qubits;
    if (witness.size() != n) {
        return false;
    }
    for (const auto &w : witness) {
        if (w.num_qubits() != n) {
            return false;
        }
    }
    for (const auto &g : inst.generators) {
        if (g.num_qubits() != n) {
            return false;
        }
    }
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) {
            if (symplectic_inner(witness[a], witness[b])) {
                return false;
            }
        }
        for (const auto &g : inst.generators) {
            if (symplectic_inner(witness[a], g)) {
                return false;
            }
        }
    }

    std::vector<PauliWord> rows = witness;
    rows.insert(rows.end(), inst.generators.begin(), inst.generators.end());
    Tableau t(rows);

    // Fully reduce the witness rows; a rank below n means dependence.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)
    std::size_t rank = 0;
    for (std::size_t c = 0; c < 2 * n && rank < n; c++) {
        std::size_t p = rank;
        while (p < n && !symplectic_bit(t, p, c)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        t.swap_rows(rank, p);
        for (std::size_t a = 0; a < n; a++) {
            if (a != rank && symplectic_bit(t, a, c)) {
                t.row_mult(rank, a);
            }
        }
        pivots.emplace_back(c, rank);
        rank++;
    }
    if (rank != n) {
        return false;
    }

    for (std::size_t g = n; g < t.num_rows(); g++) {
        for (auto [c, p] : pivots) {
            if (symplectic_bit(t, g, c)) {
                t.row_mult(p, g);
            }
        }
        if (!t.row_symplectic_zero(g) || t.phase(g)) {
            return false;
        }
    }
    return true;
}

}  // namespace cph
