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

#ifndef CPH_CLIFFORD_H
#define CPH_CLIFFORD_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cph/pauli.h"
#include "cph/tableau.h"

namespace cph {

enum class GateKind { H, S, CX };

/// One primitive gate. Qubits are 0-based; `control` is only meaningful
/// for CX, where `target` is the qubit whose X component absorbs the
/// control's.
struct Gate {
    GateKind kind;
    std::size_t target;
    std::size_t control = 0;

    static Gate h(std::size_t q) { return {GateKind::H, q, 0}; }
    static Gate s(std::size_t q) { return {GateKind::S, q, 0}; }
    static Gate cx(std::size_t control, std::size_t target) { return {GateKind::CX, target, control}; }

    bool operator==(const Gate &other) const = default;
};

/// An ordered list of primitive gates. Composite gates are expanded on
/// insertion so the recorded alphabet is exactly {H, S, CX}.
class CliffordCircuit {
   public:
    CliffordCircuit() = default;
    explicit CliffordCircuit(std::vector<Gate> gates) : gates_(std::move(gates)) {}

    void h(std::size_t q) { gates_.push_back(Gate::h(q)); }
    void s(std::size_t q) { gates_.push_back(Gate::s(q)); }
    void cx(std::size_t control, std::size_t target);
    /// H(b) CX(a,b) H(b).
    void cz(std::size_t a, std::size_t b);
    /// CX(a,b) CX(b,a) CX(a,b).
    void swap(std::size_t a, std::size_t b);
    void append(const CliffordCircuit &other);

    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    bool operator==(const CliffordCircuit &other) const = default;

   private:
    std::vector<Gate> gates_;
};

/// Reverses gate order and replaces each S by S S S.
CliffordCircuit invert(const CliffordCircuit &circuit);

// Single-gate conjugation of every row, P -> U P U^dagger. Phase updates
// always read the bits as they were before the gate.
void apply_h(Tableau &t, std::size_t q);
void apply_s(Tableau &t, std::size_t q);
void apply_cx(Tableau &t, std::size_t control, std::size_t target);
void apply_cz(Tableau &t, std::size_t a, std::size_t b);
void apply_swap(Tableau &t, std::size_t a, std::size_t b);
void apply_gate(Tableau &t, const Gate &gate);

/// Conjugates every row by the whole circuit. Works on a transposed copy so
/// each gate costs O(rows / 64) word operations; the result is identical to
/// calling apply_gate for each gate in order.
void apply_circuit(Tableau &t, const CliffordCircuit &circuit);

PauliWord conjugate(const PauliWord &w, const Gate &gate);
PauliWord conjugate(const PauliWord &w, const CliffordCircuit &circuit);

/// One gate per line: `H <q>`, `S <q>`, `CX <control> <target>`, 1-based.
std::string format_circuit(const CliffordCircuit &circuit);
CliffordCircuit parse_circuit(const std::string &text);

std::ostream &operator<<(std::ostream &out, const Gate &gate);

}  // namespace cph

#endif
