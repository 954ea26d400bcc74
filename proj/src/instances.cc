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

#include "cph/instances.h"

#include <random>
#include <stdexcept>
#include <string>

namespace cph {

TorusLattice::TorusLattice(std::size_t size) : size_(size) {
    if (size < 2) {
        throw std::invalid_argument("toric code lattice size must be at least 2, got " + std::to_string(size));
    }
}

std::size_t TorusLattice::horizontal_edge(std::size_t r, std::size_t c) const {
    return (r % size_) * size_ + (c % size_);
}

std::size_t TorusLattice::vertical_edge(std::size_t r, std::size_t c) const {
    return size_ * size_ + (r % size_) * size_ + (c % size_);
}

std::vector<std::size_t> TorusLattice::star(std::size_t r, std::size_t c) const {
    return {horizontal_edge(r, c), horizontal_edge(r, c + size_ - 1), vertical_edge(r, c),
            vertical_edge(r + size_ - 1, c)};
}

std::vector<std::size_t> TorusLattice::plaquette(std::size_t r, std::size_t c) const {
    return {horizontal_edge(r, c), horizontal_edge(r + 1, c), vertical_edge(r, c), vertical_edge(r, c + 1)};
}

Instance toric_code(std::size_t size) {
    TorusLattice lattice(size);
    const std::size_t n = lattice.num_qubits();
    Instance inst;
    inst.num_qubits = n;
    inst.metadata.push_back("generator=toric L=" + std::to_string(size));
    for (std::size_t r = 0; r < size; r++) {
        for (std::size_t c = 0; c < size; c++) {
            BitVector x(n);
            for (std::size_t e : lattice.star(r, c)) {
                x.set(e, true);
            }
            inst.generators.emplace_back(false, std::move(x), BitVector(n));
        }
    }
    for (std::size_t r = 0; r < size; r++) {
        for (std::size_t c = 0; c < size; c++) {
            BitVector z(n);
            for (std::size_t e : lattice.plaquette(r, c)) {
                z.set(e, true);
            }
            inst.generators.emplace_back(false, BitVector(n), std::move(z));
        }
    }
    return inst;
}

Instance toric_code_flipped(std::size_t size, std::size_t which) {
    Instance inst = toric_code(size);
    if (which >= inst.generators.size()) {
        throw std::invalid_argument("flip index " + std::to_string(which) + " out of range for " +
                                    std::to_string(inst.generators.size()) + " generators");
    }
    inst.generators[which] = inst.generators[which].negated();
    inst.metadata.front() = "generator=toric-flipped L=" + std::to_string(size) + " flip=" + std::to_string(which + 1);
    return inst;
}

namespace {

class Draws {
   public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}
    bool bit() { return (rng_() >> 63) != 0; }
    std::size_t below(std::size_t m) { return static_cast<std::size_t>(rng_() % m); }
    BitVector bits(std::size_t n) {
        BitVector v(n);
        for (std::size_t k = 0; k < n; k++) {
            v.set(k, bit());
        }
        return v;
    }

   private:
    std::mt19937_64 rng_;
};

bool dot(const BitVector &a, const BitVector &b) {
    Word acc = 0;
    for (std::size_t k = 0; k < a.words().size(); k++) {
        acc ^= a.words()[k] & b.words()[k];
    }
    return std::popcount(acc) & 1;
}

}  // namespace

Instance random_commuting(std::size_t n, std::size_t r, std::uint64_t seed, Force force) {
    if (n == 0 || r == 0) {
        throw std::invalid_argument("random_commuting needs n >= 1 and r >= 1");
    }
    Draws draw(seed);
    BitVector hidden(n);
    if (force == Force::Yes) {
        hidden = draw.bits(n);
    }
    std::vector<PauliWord> words;
    words.reserve(r);
    for (std::size_t i = 0; i < r; i++) {
        BitVector z = draw.bits(n);
        bool sign = draw.bit();
        if (force == Force::Yes) {
            sign = dot(z, hidden);
        }
        words.emplace_back(sign, BitVector(n), std::move(z));
    }
    if (force == Force::No) {
        PauliWord product(n);
        bool any = false;
        for (std::size_t i = 0; i + 1 < r; i++) {
            if (draw.bit()) {
                product = multiply(product, words[i]);
                any = true;
            }
        }
        if (!any && r > 1) {
            product = words[0];
        }
        words[r - 1] = product.negated();
    }

    CliffordCircuit scramble;
    const std::size_t num_gates = n * n + n;
    for (std::size_t g = 0; g < num_gates; g++) {
        std::size_t kind = n == 1 ? draw.below(2) : draw.below(3);
        std::size_t q = draw.below(n);
        if (kind == 0) {
            scramble.h(q);
        } else if (kind == 1) {
            scramble.s(q);
        } else {
            std::size_t t = draw.below(n - 1);
            if (t >= q) {
                t++;
            }
            scramble.cx(q, t);
        }
    }
    Tableau t(words);
    apply_circuit(t, scramble);

    Instance inst;
    inst.num_qubits = n;
    inst.generators = t.words();
    inst.metadata.push_back("generator=random n=" + std::to_string(n) + " r=" + std::to_string(r) +
                            " seed=" + std::to_string(seed) + " force=" + (force == Force::Yes ? "yes" : "no") +
                            " rng=mt19937_64 gates=" + std::to_string(num_gates));
    inst.metadata.push_back(std::string("expected=") + (force == Force::Yes ? "YES" : "NO"));
    return inst;
}

Instance randomize_signs(const Instance &inst, std::uint64_t seed) {
    Draws draw(seed);
    Instance out;
    out.num_qubits = inst.num_qubits;
    out.metadata = inst.metadata;
    for (auto &line : out.metadata) {
        if (line.starts_with("expected=")) {
            line = "expected=unknown";
        }
    }
    out.metadata.push_back("signs redrawn seed=" + std::to_string(seed) + " rng=mt19937_64");
    for (const auto &w : inst.generators) {
        out.generators.emplace_back(draw.bit(), w.x(), w.z());
    }
    return out;
}

}  // namespace cph
