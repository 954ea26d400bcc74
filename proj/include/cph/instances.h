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

#ifndef CPH_INSTANCES_H
#define CPH_INSTANCES_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cph/clifford.h"
#include "cph/tableau.h"

namespace cph {

/// Edge numbering of an L x L periodic square lattice with 2 L^2 qubits.
///
/// Vertex (r, c) and face (r, c) are indexed row-major, 0 <= r, c < L; face
/// (r, c) has vertex (r, c) as its top-left corner. Horizontal edge (r, c)
/// joins vertex (r, c) to (r, c+1) and is qubit r*L + c. Vertical edge
/// (r, c) joins vertex (r, c) to (r+1, c) and is qubit L^2 + r*L + c.
class TorusLattice {
   public:
    explicit TorusLattice(std::size_t size);

    std::size_t size() const { return size_; }
    std::size_t num_qubits() const { return 2 * size_ * size_; }

    std::size_t horizontal_edge(std::size_t r, std::size_t c) const;
    std::size_t vertical_edge(std::size_t r, std::size_t c) const;

    /// The four edges meeting at vertex (r, c).
    std::vector<std::size_t> star(std::size_t r, std::size_t c) const;
    /// The four edges bounding face (r, c).
    std::vector<std::size_t> plaquette(std::size_t r, std::size_t c) const;

   private:
    std::size_t size_;
};

/// L^2 star terms (+X on a vertex's edges, vertices row-major) followed by
/// L^2 plaquette terms (+Z on a face's edges, faces row-major). L >= 2.
Instance toric_code(std::size_t size);

/// toric_code(size) with generator `which` (0-based) negated. The product
/// of all stars (or all plaquettes) is +I, so the flipped instance is a NO.
Instance toric_code_flipped(std::size_t size, std::size_t which);

enum class Force { Yes, No };

/// Seeded random commuting instance with a known answer.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`; one random bit
/// is the top bit of one output and an index below m is output % m. Draw
/// order:
///   1. YES only: a hidden assignment s, n bits.
///   2. r Z-type words: n bits each, then one sign bit (sign bits are
///      drawn for YES too but replaced by z.s mod 2, so |s> is a common +1
///      eigenstate).
///   3. NO only: r-1 subset bits; the last word is replaced by the product
///      of the chosen earlier words (word 1 if none were chosen), with its
///      sign flipped so that this subset multiplies to -I. With r = 1 the
///      single word becomes -I.
///   4. A scrambling circuit of n^2 + n gates: kind = output % 3 (% 2 when
///      n = 1: H, S, CX), then qubit = output % n; CX draws its control
///      like a qubit, then target = output % (n-1), skipping the control.
/// The circuit conjugates every word. Metadata records the parameters.
Instance random_commuting(std::size_t n, std::size_t r, std::uint64_t seed, Force force);

/// Same generators with every sign redrawn (top bit of one mt19937_64
/// output per word). The answer is not known in advance.
Instance randomize_signs(const Instance &inst, std::uint64_t seed);

}  // namespace cph

#endif
