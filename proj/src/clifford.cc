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

#include "cph/clifford.h"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cph {

void CliffordCircuit::cx(std::size_t control, std::size_t target) {
    if (control == target) {
        throw std::invalid_argument("CX needs two distinct qubits");
    }
    gates_.push_back(Gate::cx(control, target));
}

void CliffordCircuit::cz(std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits");
    }
    h(b);
    cx(a, b);
    h(b);
}

void CliffordCircuit::swap(std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("SWAP needs two distinct qubits");
    }
    cx(a, b);
    cx(b, a);
    cx(a, b);
}

void CliffordCircuit::append(const CliffordCircuit &other) {
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

CliffordCircuit invert(const CliffordCircuit &circuit) {
    std::vector<Gate> out;
    out.reserve(circuit.size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        out.push_back(*it);
        if (it->kind == GateKind::S) {
            out.push_back(*it);
            out.push_back(*it);
        }
    }
    return CliffordCircuit(std::move(out));
}

namespace {

void check_qubit(const Tableau &t, std::size_t q) {
    if (q >= t.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(q + 1) + " out of range for " +
                                std::to_string(t.num_qubits()) + " qubits");
    }
}

void check_gate(const Tableau &t, const Gate &gate) {
    check_qubit(t, gate.target);
    if (gate.kind == GateKind::CX) {
        check_qubit(t, gate.control);
        if (gate.control == gate.target) {
            throw std::invalid_argument("CX needs two distinct qubits");
        }
    }
}

}  // namespace

void apply_h(Tableau &t, std::size_t q) {
    check_qubit(t, q);
    auto &xs = t.xs();
    auto &zs = t.zs();
    auto &ph = t.phases();
    for (std::size_t a = 0; a < t.num_rows(); a++) {
        bool x = xs.get(a, q);
        bool z = zs.get(a, q);
        if (x && z) {
            ph.flip(a);
        }
        xs.set(a, q, z);
        zs.set(a, q, x);
    }
}

void apply_s(Tableau &t, std::size_t q) {
    check_qubit(t, q);
    auto &xs = t.xs();
    auto &zs = t.zs();
    auto &ph = t.phases();
    for (std::size_t a = 0; a < t.num_rows(); a++) {
        bool x = xs.get(a, q);
        bool z = zs.get(a, q);
        if (x && z) {
            ph.flip(a);
        }
        zs.set(a, q, x != z);
    }
}

void apply_cx(Tableau &t, std::size_t control, std::size_t target) {
    check_gate(t, Gate::cx(control, target));
    auto &xs = t.xs();
    auto &zs = t.zs();
    auto &ph = t.phases();
    for (std::size_t a = 0; a < t.num_rows(); a++) {
        bool xc = xs.get(a, control);
        bool zc = zs.get(a, control);
        bool xt = xs.get(a, target);
        bool zt = zs.get(a, target);
        if (xc && zt && !(xt != zc)) {
            ph.flip(a);
        }
        xs.set(a, target, xt != xc);
        zs.set(a, control, zc != zt);
    }
}

void apply_cz(Tableau &t, std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits");
    }
    apply_h(t, b);
    apply_cx(t, a, b);
    apply_h(t, b);
}

void apply_swap(Tableau &t, std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("SWAP needs two distinct qubits");
    }
    apply_cx(t, a, b);
    apply_cx(t, b, a);
    apply_cx(t, a, b);
}

void apply_gate(Tableau &t, const Gate &gate) {
    switch (gate.kind) {
        case GateKind::H:
            apply_h(t, gate.target);
            break;
        case GateKind::S:
            apply_s(t, gate.target);
            break;
        case GateKind::CX:
            apply_cx(t, gate.control, gate.target);
            break;
    }
}

void apply_circuit(Tableau &t, const CliffordCircuit &circuit) {
    for (const Gate &gate : circuit.gates()) {
        check_gate(t, gate);
    }
    if (circuit.empty() || t.num_rows() == 0) {
        return;
    }
    // Column-major: row q of xt/zt holds qubit q's bit for every tableau row.
    BitMatrix xt = t.xs().transposed();
    BitMatrix zt = t.zs().transposed();
    std::span<Word> ph = t.phases().words();
    const std::size_t nw = ph.size();
    for (const Gate &gate : circuit.gates()) {
        switch (gate.kind) {
            case GateKind::H: {
                auto x = xt.row(gate.target);
                auto z = zt.row(gate.target);
                for (std::size_t w = 0; w < nw; w++) {
                    ph[w] ^= x[w] & z[w];
                    std::swap(x[w], z[w]);
                }
                break;
            }
            case GateKind::S: {
                auto x = xt.row(gate.target);
                auto z = zt.row(gate.target);
                for (std::size_t w = 0; w < nw; w++) {
                    ph[w] ^= x[w] & z[w];
                    z[w] ^= x[w];
                }
                break;
            }
            case GateKind::CX: {
                auto xc = xt.row(gate.control);
                auto zc = zt.row(gate.control);
                auto xg = xt.row(gate.target);
                auto zg = zt.row(gate.target);
                for (std::size_t w = 0; w < nw; w++) {
                    ph[w] ^= xc[w] & zg[w] & ~(xg[w] ^ zc[w]);
                    xg[w] ^= xc[w];
                    zc[w] ^= zg[w];
                }
                break;
            }
        }
    }
    t.xs() = xt.transposed();
    t.zs() = zt.transposed();
}

PauliWord conjugate(const PauliWord &w, const Gate &gate) {
    Tableau t({w});
    apply_gate(t, gate);
    return t.word(0);
}

PauliWord conjugate(const PauliWord &w, const CliffordCircuit &circuit) {
    Tableau t({w});
    apply_circuit(t, circuit);
    return t.word(0);
}

std::ostream &operator<<(std::ostream &out, const Gate &gate) {
    switch (gate.kind) {
        case GateKind::H:
            return out << "H " << gate.target + 1;
        case GateKind::S:
            return out << "S " << gate.target + 1;
        case GateKind::CX:
            return out << "CX " << gate.control + 1 << ' ' << gate.target + 1;
    }
    return out;
}

std::string format_circuit(const CliffordCircuit &circuit) {
    std::ostringstream out;
    for (const Gate &gate : circuit.gates()) {
        out << gate << '\n';
    }
    return out.str();
}

CliffordCircuit parse_circuit(const std::string &text) {
    CliffordCircuit circuit;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto bad = [&](const std::string &why) {
        return std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) {
            continue;
        }
        long long a = 0;
        long long b = 0;
        if (!(fields >> a) || a < 1) {
            throw bad("expected a 1-based qubit index");
        }
        if (name == "H") {
            circuit.h(static_cast<std::size_t>(a - 1));
        } else if (name == "S") {
            circuit.s(static_cast<std::size_t>(a - 1));
        } else if (name == "CX") {
            if (!(fields >> b) || b < 1) {
                throw bad("CX expects two 1-based qubit indices");
            }
            circuit.cx(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
        } else {
            throw bad("unknown gate '" + name + "'");
        }
        std::string extra;
        if (fields >> extra) {
            throw bad("trailing text '" + extra + "'");
        }
    }
    return circuit;
}

}  // namespace cph
