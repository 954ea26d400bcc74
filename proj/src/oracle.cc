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

#include "cph/oracle.h"

#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cph::oracle {

std::ostream &operator<<(std::ostream &out, GaussInt v) { return out << '(' << v.re << (v.im < 0 ? "" : "+") << v.im << "i)"; }

DenseOperator DenseOperator::identity(std::size_t dim) {
    DenseOperator m(dim);
    for (std::size_t k = 0; k < dim; k++) {
        m.at(k, k) = {1, 0};
    }
    return m;
}

DenseOperator::DenseOperator(std::size_t dim, std::vector<GaussInt> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("DenseOperator: entry count does not match dimension");
    }
}

DenseOperator DenseOperator::operator*(const DenseOperator &o) const {
    if (o.dim_ != dim_) {
        throw std::invalid_argument("DenseOperator product: dimension mismatch");
    }
    DenseOperator out(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t k = 0; k < dim_; k++) {
            GaussInt a = at(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; j++) {
                GaussInt b = o.at(k, j);
                if (!b.is_zero()) {
                    out.at(i, j) += a * b;
                }
            }
        }
    }
    return out;
}

DenseOperator DenseOperator::operator+(const DenseOperator &o) const {
    if (o.dim_ != dim_) {
        throw std::invalid_argument("DenseOperator sum: dimension mismatch");
    }
    DenseOperator out(dim_);
    for (std::size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = data_[k] + o.data_[k];
    }
    return out;
}

DenseOperator DenseOperator::operator-() const {
    DenseOperator out(dim_);
    for (std::size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = -data_[k];
    }
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            out.at(j, i) = at(i, j).conj();
        }
    }
    return out;
}

DenseOperator DenseOperator::kron(const DenseOperator &o) const {
    DenseOperator out(dim_ * o.dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            GaussInt a = at(i, j);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < o.dim_; k++) {
                for (std::size_t l = 0; l < o.dim_; l++) {
                    out.at(i * o.dim_ + k, j * o.dim_ + l) = a * o.at(k, l);
                }
            }
        }
    }
    return out;
}

DenseOperator DenseOperator::divided_by(std::int64_t d) const {
    if (d == 0) {
        throw std::invalid_argument("DenseOperator: division by zero");
    }
    DenseOperator out(dim_);
    for (std::size_t k = 0; k < data_.size(); k++) {
        if (data_[k].re % d != 0 || data_[k].im % d != 0) {
            throw std::domain_error("DenseOperator: entry not divisible");
        }
        out.data_[k] = {data_[k].re / d, data_[k].im / d};
    }
    return out;
}

GaussInt DenseOperator::trace() const {
    GaussInt t;
    for (std::size_t k = 0; k < dim_; k++) {
        t += at(k, k);
    }
    return t;
}

std::vector<GaussInt> DenseOperator::apply(const std::vector<GaussInt> &v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("DenseOperator::apply: dimension mismatch");
    }
    std::vector<GaussInt> out(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            GaussInt a = at(i, j);
            if (!a.is_zero()) {
                out[i] += a * v[j];
            }
        }
    }
    return out;
}

namespace {

void check_limit(std::size_t n, std::size_t limit) {
    if (n > limit) {
        throw std::invalid_argument("dense oracle limited to " + std::to_string(limit) + " qubits, got " +
                                    std::to_string(n));
    }
}

DenseOperator single_qubit(char letter) {
    switch (letter) {
        case 'X':
            return DenseOperator(2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
        case 'Y':
            return DenseOperator(2, {{0, 0}, {0, -1}, {0, 1}, {0, 0}});
        case 'Z':
            return DenseOperator(2, {{1, 0}, {0, 0}, {0, 0}, {-1, 0}});
        default:
            return DenseOperator::identity(2);
    }
}

// A matrix with exactly one nonzero per row: row k maps to (col[k], val[k]).
struct Monomial {
    std::vector<std::size_t> col;
    std::vector<GaussInt> val;

    static Monomial from_dense(const DenseOperator &m) {
        Monomial out;
        out.col.resize(m.dim());
        out.val.resize(m.dim());
        for (std::size_t i = 0; i < m.dim(); i++) {
            std::size_t found = 0;
            for (std::size_t j = 0; j < m.dim(); j++) {
                if (!m.at(i, j).is_zero()) {
                    out.col[i] = j;
                    out.val[i] = m.at(i, j);
                    found++;
                }
            }
            if (found != 1) {
                throw std::logic_error("oracle: Pauli matrix row is not monomial");
            }
        }
        return out;
    }

    // (this * o) row i.
    std::pair<std::size_t, GaussInt> product_row(const Monomial &o, std::size_t i) const {
        return {o.col[col[i]], val[i] * o.val[col[i]]};
    }

    // out = v + this * v
    void add_applied(const std::vector<GaussInt> &v, std::vector<GaussInt> &out) const {
        for (std::size_t i = 0; i < col.size(); i++) {
            out[i] = v[i] + val[i] * v[col[i]];
        }
    }
};

std::vector<Monomial> monomials_of(const std::vector<PauliWord> &words, std::size_t limit) {
    std::vector<Monomial> out;
    out.reserve(words.size());
    for (const auto &w : words) {
        out.push_back(Monomial::from_dense(dense(w, limit)));
    }
    return out;
}

}  // namespace

DenseOperator dense(const PauliWord &w, std::size_t limit) {
    check_limit(w.num_qubits(), limit);
    DenseOperator out(1, {{w.phase() ? -1 : 1, 0}});
    for (std::size_t q = 0; q < w.num_qubits(); q++) {
        out = out.kron(single_qubit(w.letter(q)));
    }
    return out;
}

DenseOperator dense_gate(const Gate &gate, std::size_t n, std::size_t limit) {
    check_limit(n, limit);
    auto check = [&](std::size_t q) {
        if (q >= n) {
            throw std::out_of_range("dense_gate: qubit out of range");
        }
    };
    check(gate.target);
    const std::size_t dim = std::size_t{1} << n;
    auto mask = [&](std::size_t q) { return std::size_t{1} << (n - 1 - q); };
    switch (gate.kind) {
        case GateKind::H: {
            DenseOperator out(1, {{1, 0}});
            for (std::size_t q = 0; q < n; q++) {
                out = out.kron(q == gate.target ? DenseOperator(2, {{1, 0}, {1, 0}, {1, 0}, {-1, 0}})
                                                : DenseOperator::identity(2));
            }
            return out;
        }
        case GateKind::S: {
            DenseOperator out(dim);
            for (std::size_t b = 0; b < dim; b++) {
                out.at(b, b) = (b & mask(gate.target)) ? GaussInt{0, 1} : GaussInt{1, 0};
            }
            return out;
        }
        case GateKind::CX: {
            check(gate.control);
            if (gate.control == gate.target) {
                throw std::invalid_argument("dense_gate: CX needs two distinct qubits");
            }
            DenseOperator out(dim);
            for (std::size_t b = 0; b < dim; b++) {
                std::size_t image = (b & mask(gate.control)) ? (b ^ mask(gate.target)) : b;
                out.at(image, b) = {1, 0};
            }
            return out;
        }
    }
    throw std::logic_error("dense_gate: unknown gate kind");
}

DenseOperator dense_conjugate(const DenseOperator &gate, const DenseOperator &op) {
    DenseOperator gram = gate * gate.adjoint();
    GaussInt norm = gram.at(0, 0);
    if (norm.im != 0 || norm.re <= 0) {
        throw std::invalid_argument("dense_conjugate: gate is not a multiple of a unitary");
    }
    for (std::size_t i = 0; i < gram.dim(); i++) {
        for (std::size_t j = 0; j < gram.dim(); j++) {
            GaussInt expect = i == j ? norm : GaussInt{};
            if (!(gram.at(i, j) == expect)) {
                throw std::invalid_argument("dense_conjugate: gate is not a multiple of a unitary");
            }
        }
    }
    return (gate * op * gate.adjoint()).divided_by(norm.re);
}

std::uint64_t groundspace_dim(const Instance &inst, std::size_t limit) {
    inst.check_shape();
    check_limit(inst.num_qubits, limit);
    const auto ops = monomials_of(inst.generators, limit);
    const std::size_t dim = std::size_t{1} << inst.num_qubits;
    for (std::size_t a = 0; a < ops.size(); a++) {
        for (std::size_t b = a + 1; b < ops.size(); b++) {
            for (std::size_t i = 0; i < dim; i++) {
                if (ops[a].product_row(ops[b], i) != ops[b].product_row(ops[a], i)) {
                    throw PromiseViolation("oracle: generators " + std::to_string(a + 1) + " and " +
                                           std::to_string(b + 1) + " do not commute");
                }
            }
        }
    }
    if (ops.size() >= 62) {
        throw std::length_error("groundspace_dim: too many generators for exact normalization");
    }

    // Q <- Q (I + S) for each generator, on the full matrix.
    DenseOperator q = DenseOperator::identity(dim);
    for (const auto &s : ops) {
        DenseOperator next = q;
        for (std::size_t i = 0; i < dim; i++) {
            for (std::size_t k = 0; k < dim; k++) {
                GaussInt v = q.at(i, k);
                if (!v.is_zero()) {
                    next.at(i, s.col[k]) += v * s.val[k];
                }
            }
        }
        q = std::move(next);
    }
    GaussInt tr = q.trace();
    const std::int64_t scale = std::int64_t{1} << ops.size();
    if (tr.im != 0 || tr.re < 0 || tr.re % scale != 0) {
        throw std::logic_error("groundspace_dim: projector trace is not a non-negative integer");
    }
    return static_cast<std::uint64_t>(tr.re / scale);
}

std::vector<PauliWord> group_closure(const std::vector<PauliWord> &words, std::size_t max_elements) {
    if (words.empty()) {
        return {};
    }
    if (words.size() >= 63 || (std::size_t{1} << words.size()) > max_elements) {
        throw std::length_error("group_closure: 2^" + std::to_string(words.size()) + " exceeds element bound");
    }
    std::map<std::string, PauliWord> seen;
    std::deque<PauliWord> frontier;
    PauliWord one(words.front().num_qubits());
    seen.emplace(format_pauli(one), one);
    frontier.push_back(one);
    while (!frontier.empty()) {
        PauliWord cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto &w : words) {
            PauliWord next = multiply(cur, w);
            auto [it, inserted] = seen.emplace(format_pauli(next), next);
            if (inserted) {
                frontier.push_back(next);
            }
        }
    }
    std::vector<PauliWord> out;
    out.reserve(seen.size());
    for (auto &[text, w] : seen) {
        out.push_back(std::move(w));
    }
    return out;
}

bool closure_contains_minus_identity(const Instance &inst, std::size_t max_elements) {
    inst.check_shape();
    for (const auto &w : group_closure(inst.generators, max_elements)) {
        if (w.is_minus_identity()) {
            return true;
        }
    }
    return false;
}

std::vector<GaussInt> stabilized_state(const std::vector<PauliWord> &words, std::size_t limit) {
    if (words.empty()) {
        return {};
    }
    const std::size_t n = words.front().num_qubits();
    check_limit(n, limit);
    const auto ops = monomials_of(words, limit);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<GaussInt> v(dim);
    std::vector<GaussInt> next(dim);
    for (std::size_t b = 0; b < dim; b++) {
        std::fill(v.begin(), v.end(), GaussInt{});
        v[b] = {1, 0};
        for (const auto &op : ops) {
            op.add_applied(v, next);
            std::swap(v, next);
        }
        for (const auto &e : v) {
            if (!e.is_zero()) {
                return v;
            }
        }
    }
    return {};
}

bool stabilizes(const Instance &inst, const std::vector<GaussInt> &state, std::size_t limit) {
    check_limit(inst.num_qubits, limit);
    const std::size_t dim = std::size_t{1} << inst.num_qubits;
    if (state.size() != dim) {
        return false;
    }
    bool nonzero = false;
    for (const auto &e : state) {
        nonzero = nonzero || !e.is_zero();
    }
    if (!nonzero) {
        return false;
    }
    for (const auto &op : monomials_of(inst.generators, limit)) {
        for (std::size_t i = 0; i < dim; i++) {
            if (!(op.val[i] * state[op.col[i]] == state[i])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cph::oracle
