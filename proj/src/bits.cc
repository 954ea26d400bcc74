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

#include "cph/bits.h"

#include <algorithm>
#include <stdexcept>

namespace cph {

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector xor: length mismatch");
    }
    xor_words(words_, other.words_);
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

bool BitVector::padding_is_clear() const {
    if (num_bits_ % kWordBits == 0 || words_.empty()) {
        return true;
    }
    Word used = (Word{1} << (num_bits_ % kWordBits)) - 1;
    return (words_.back() & ~used) == 0;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(num_cols_);
    std::copy_n(data_.begin() + r * stride_, stride_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector &bits) {
    if (bits.size() != num_cols_) {
        throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    }
    std::copy_n(bits.words().begin(), stride_, data_.begin() + r * stride_);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(num_cols_, num_rows_);
    for (std::size_t r = 0; r < num_rows_; r++) {
        const Word *src = data_.data() + r * stride_;
        for (std::size_t w = 0; w < stride_; w++) {
            Word bits = src[w];
            while (bits) {
                std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                t.data_[c * t.stride_ + r / kWordBits] |= Word{1} << (r % kWordBits);
            }
        }
    }
    return t;
}

std::size_t gf2_rank(BitMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); c++) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, c)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(rank, pivot);
        for (std::size_t r = 0; r < m.rows(); r++) {
            if (r != rank && m.get(r, c)) {
                m.xor_row(r, rank);
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace cph
