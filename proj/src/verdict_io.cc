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

#include "cph/verdict_io.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cph {

namespace {

nlohmann::json optional_rank(const std::optional<std::size_t> &value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

std::optional<std::size_t> read_optional_rank(const nlohmann::json &doc, const char *key) {
    const auto &value = doc.at(key);
    if (value.is_null()) {
        return std::nullopt;
    }
    return value.get<std::size_t>();
}

}  // namespace

std::string format_verdict_json(const Verdict &v, const VerdictFormat &format) {
    nlohmann::json doc;
    doc["answer"] = v.yes() ? "YES" : "NO";
    doc["n"] = v.num_qubits;
    doc["r"] = v.num_generators;
    doc["k"] = optional_rank(v.k);
    doc["k_prime"] = optional_rank(v.k_prime);
    doc["gates"] = v.gate_count;
    doc["row_ops"] = v.row_op_count;
    auto certificate = nlohmann::json::array();
    if (format.certificate) {
        for (std::size_t idx : v.certificate) {
            certificate.push_back(idx + 1);
        }
    }
    doc["certificate"] = certificate;
    auto witness = nlohmann::json::array();
    if (format.witness) {
        for (const auto &w : v.witness) {
            witness.push_back(format_pauli(w));
        }
    }
    doc["witness"] = witness;
    return doc.dump(2) + "\n";
}

Verdict parse_verdict_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("verdict is not valid JSON: ") + e.what());
    }
    try {
        Verdict v;
        std::string answer = doc.at("answer").get<std::string>();
        if (answer == "YES") {
            v.answer = Answer::Yes;
        } else if (answer == "NO") {
            v.answer = Answer::No;
        } else {
            throw std::invalid_argument("verdict answer must be YES or NO, got '" + answer + "'");
        }
        v.num_qubits = doc.at("n").get<std::size_t>();
        v.num_generators = doc.at("r").get<std::size_t>();
        v.k = read_optional_rank(doc, "k");
        v.k_prime = read_optional_rank(doc, "k_prime");
        v.gate_count = doc.at("gates").get<std::size_t>();
        v.row_op_count = doc.at("row_ops").get<std::size_t>();
        for (const auto &idx : doc.at("certificate")) {
            auto one_based = idx.get<std::size_t>();
            if (one_based == 0) {
                throw std::invalid_argument("certificate indices are 1-based");
            }
            v.certificate.push_back(one_based - 1);
        }
        for (const auto &w : doc.at("witness")) {
            v.witness.push_back(parse_pauli(w.get<std::string>(), v.num_qubits));
        }
        return v;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed verdict: ") + e.what());
    }
}

std::string format_verdict_text(const Verdict &v, const VerdictFormat &format) {
    std::ostringstream out;
    out << (v.yes() ? "YES" : "NO") << '\n';
    auto rank = [](const std::optional<std::size_t> &value) {
        return value ? std::to_string(*value) : std::string("-");
    };
    out << "n " << v.num_qubits << " r " << v.num_generators << '\n';
    out << "k " << rank(v.k) << " k' " << rank(v.k_prime) << '\n';
    out << "gates " << v.gate_count << " row_ops " << v.row_op_count << '\n';
    if (format.certificate && !v.yes()) {
        out << "certificate";
        for (std::size_t idx : v.certificate) {
            out << ' ' << idx + 1;
        }
        out << '\n';
    }
    if (format.witness && v.yes()) {
        out << "witness\n";
        for (const auto &w : v.witness) {
            out << format_pauli(w) << '\n';
        }
    }
    return out.str();
}

}  // namespace cph
