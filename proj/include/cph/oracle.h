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

#ifndef CPH_ORACLE_H
#define CPH_ORACLE_H

// Brute-force reference semantics on dense 2^n x 2^n matrices. Everything is
// exact Gaussian-integer arithmetic, so comparisons are equalities.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cph/clifford.h"
#include "cph/pauli.h"
#include "cph/tableau.h"

namespace cph::oracle {

inline constexpr std::size_t kDefaultDenseLimit = 10;

struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt conj() const { return {re, -im}; }
    GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(GaussInt o) const { return {re - o.re, im - o.im}; }
    GaussInt operator-() const { return {-re, -im}; }
    GaussInt operator*(GaussInt o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GaussInt &operator+=(GaussInt o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool operator==(const GaussInt &o) const = default;
};

std::ostream &operator<<(std::ostream &out, GaussInt v);

class DenseOperator {
   public:
    DenseOperator() = default;
    explicit DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    static DenseOperator identity(std::size_t dim);
    DenseOperator(std::size_t dim, std::vector<GaussInt> row_major);

    std::size_t dim() const { return dim_; }
    GaussInt &at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    GaussInt at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    /// Exact product; zero entries of the left factor are skipped, so signed
    /// permutation matrices multiply in O(dim^2).
    DenseOperator operator*(const DenseOperator &o) const;
    DenseOperator operator+(const DenseOperator &o) const;
    DenseOperator operator-() const;
    DenseOperator adjoint() const;
    DenseOperator kron(const DenseOperator &o) const;
    /// Divides every entry by `d`; throws if any entry is not divisible.
    DenseOperator divided_by(std::int64_t d) const;
    GaussInt trace() const;

    std::vector<GaussInt> apply(const std::vector<GaussInt> &v) const;

    bool operator==(const DenseOperator &o) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<GaussInt> data_;
};

/// (-1)^p P(x_1,z_1) (x) ... (x) P(x_n,z_n), qubit 1 the most significant
/// tensor factor. Throws std::invalid_argument if n exceeds `limit`.
DenseOperator dense(const PauliWord &w, std::size_t limit = kDefaultDenseLimit);

/// Integer multiple of a gate's unitary on n qubits: H is sqrt(2) H, S is
/// diag(1, i), CX is the permutation matrix.
DenseOperator dense_gate(const Gate &gate, std::size_t n, std::size_t limit = kDefaultDenseLimit);

/// U P U^dagger for U proportional to `gate`, normalized exactly.
DenseOperator dense_conjugate(const DenseOperator &gate, const DenseOperator &op);

/// Tr prod_i (I + S_i) / 2: the dimension of the common +1 eigenspace.
/// Throws PromiseViolation if two generators do not commute as matrices.
std::uint64_t groundspace_dim(const Instance &inst, std::size_t limit = kDefaultDenseLimit);

/// Breadth-first closure of the signed group generated by the instance;
/// true iff -I is an element. Throws std::length_error if 2^r exceeds
/// `max_elements`.
bool closure_contains_minus_identity(const Instance &inst, std::size_t max_elements = std::size_t{1} << 20);

/// All elements of the signed group generated by `words`, sorted by their
/// text form.
std::vector<PauliWord> group_closure(const std::vector<PauliWord> &words,
                                     std::size_t max_elements = std::size_t{1} << 20);

/// A nonzero (unnormalized) vector fixed by every word, built as
/// prod_i (I + W_i) |b> for the first basis state b where that is nonzero.
/// Returns an empty vector if no such state exists.
std::vector<GaussInt> stabilized_state(const std::vector<PauliWord> &words, std::size_t limit = kDefaultDenseLimit);

/// True iff dense(w) v == v for every generator.
bool stabilizes(const Instance &inst, const std::vector<GaussInt> &state, std::size_t limit = kDefaultDenseLimit);

}  // namespace cph::oracle

#endif
