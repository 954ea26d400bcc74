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

#include "cph/tableau.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace cph {

void Instance::check_shape() const {
    if (num_qubits == 0) {
        throw std::invalid_argument("instance must act on at least one qubit");
    }
    if (generators.empty()) {
        throw std::invalid_argument("instance has no generators");
    }
    for (std::size_t k = 0; k < generators.size(); k++) {
        if (generators[k].num_qubits() != num_qubits) {
            throw std::invalid_argument("generator " + std::to_string(k + 1) + " acts on " +
                                        std::to_string(generators[k].num_qubits()) + " qubits, expected " +
                                        std::to_string(num_qubits));
        }
    }
}

std::vector<std::pair<std::size_t, std::size_t>> validate_commuting(const Instance &inst) {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    const auto &gens = inst.generators;
    for (std::size_t j = 0; j < gens.size(); j++) {
        for (std::size_t k = j + 1; k < gens.size(); k++) {
            if (symplectic_inner(gens[j], gens[k])) {
                bad.emplace_back(j, k);
            }
        }
    }
    return bad;
}

namespace {

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) {
        b++;
    }
    std::size_t e = s.size();
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
        e--;
    }
    return s.substr(b, e - b);
}

std::size_t parse_qubit_count(std::string_view line, std::size_t line_no) {
    if (line.size() < 2 || line[0] != 'n' || (line[1] != ' ' && line[1] != '\t')) {
        throw InstanceParseError(line_no, "expected 'n <qubits>' header, got '" + std::string(line) + "'");
    }
    std::string_view digits = trim(line.substr(1));
    std::size_t n = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size() || n == 0) {
        throw InstanceParseError(line_no, "qubit count must be a positive integer, got '" + std::string(digits) + "'");
    }
    return n;
}

}  // namespace

Instance read_instance(std::istream &in) {
    Instance inst;
    bool have_header = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            std::string_view body = line.substr(1);
            if (!body.empty() && body.front() == ' ') {
                body.remove_prefix(1);
            }
            inst.metadata.emplace_back(body);
            continue;
        }
        if (!have_header) {
            inst.num_qubits = parse_qubit_count(line, line_no);
            have_header = true;
            continue;
        }
        try {
            inst.generators.push_back(parse_pauli(line, inst.num_qubits));
        } catch (const std::invalid_argument &e) {
            throw InstanceParseError(line_no, e.what());
        }
    }
    if (!have_header) {
        throw InstanceParseError(line_no, "missing 'n <qubits>' header");
    }
    if (inst.generators.empty()) {
        throw InstanceParseError(line_no, "instance has no generators");
    }
    return inst;
}

Instance parse_instance(const std::string &text) {
    std::istringstream in(text);
    return read_instance(in);
}

void write_instance(std::ostream &out, const Instance &inst) {
    for (const auto &line : inst.metadata) {
        out << "# " << line << '\n';
    }
    out << "n " << inst.num_qubits << '\n';
    for (const auto &w : inst.generators) {
        out << format_pauli(w) << '\n';
    }
}

std::string format_instance(const Instance &inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

Tableau::Tableau(const std::vector<PauliWord> &words)
    : num_qubits_(words.empty() ? 0 : words.front().num_qubits()),
      phases_(words.size()),
      xs_(words.size(), num_qubits_),
      zs_(words.size(), num_qubits_),
      history_(BitMatrix::identity(words.size())) {
    for (std::size_t a = 0; a < words.size(); a++) {
        if (words[a].num_qubits() != num_qubits_) {
            throw std::invalid_argument("Tableau: generators act on different qubit counts");
        }
        phases_.set(a, words[a].phase());
        xs_.set_row(a, words[a].x());
        zs_.set_row(a, words[a].z());
    }
}

PauliWord Tableau::word(std::size_t a) const { return PauliWord(phases_.get(a), xs_.row_vector(a), zs_.row_vector(a)); }

std::vector<PauliWord> Tableau::words() const {
    std::vector<PauliWord> out;
    out.reserve(num_rows());
    for (std::size_t a = 0; a < num_rows(); a++) {
        out.push_back(word(a));
    }
    return out;
}

void Tableau::row_mult(std::size_t j, std::size_t k) {
    if (j == k) {
        throw std::invalid_argument("row_mult: rows must differ");
    }
    int t = 2 * int(phases_.get(j)) + 2 * int(phases_.get(k)) + packed_g_sum(xs_.row(j), zs_.row(j), xs_.row(k), zs_.row(k));
    int m = ((t % 4) + 4) % 4;
    if (m & 1) {
        throw PromiseViolation("row_mult: rows " + std::to_string(j) + " and " + std::to_string(k) + " anticommute");
    }
    phases_.set(k, m == 2);
    xs_.xor_row(k, j);
    zs_.xor_row(k, j);
    history_.xor_row(k, j);
    row_ops_++;
}

void Tableau::swap_rows(std::size_t j, std::size_t k) {
    if (j == k) {
        return;
    }
    bool pj = phases_.get(j);
    phases_.set(j, phases_.get(k));
    phases_.set(k, pj);
    xs_.swap_rows(j, k);
    zs_.swap_rows(j, k);
    history_.swap_rows(j, k);
    row_ops_++;
}

std::optional<std::size_t> Tableau::find_minus_identity() const {
    for (std::size_t a = 0; a < num_rows(); a++) {
        if (row_is_minus_identity(a)) {
            return a;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> Tableau::history_indices(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < history_.cols(); c++) {
        if (history_.get(a, c)) {
            out.push_back(c);
        }
    }
    return out;
}

bool Tableau::operator==(const Tableau &other) const {
    return num_qubits_ == other.num_qubits_ && phases_ == other.phases_ && xs_ == other.xs_ && zs_ == other.zs_ &&
           history_ == other.history_;
}

std::ostream &operator<<(std::ostream &out, const Tableau &t) {
    for (std::size_t a = 0; a < t.num_rows(); a++) {
        out << format_pauli(t.word(a)) << '\n';
    }
    return out;
}

}  // namespace cph
