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

#ifndef CPH_BITS_H
#define CPH_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cph {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t num_bits) {
    return (num_bits + kWordBits - 1) / kWordBits;
}

/// dst ^= src, word by word. Both spans must have the same length.
inline void xor_words(std::span<Word> dst, std::span<const Word> src) {
    for (std::size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

inline bool words_all_zero(std::span<const Word> words) {
    for (Word w : words) {
        if (w) {
            return false;
        }
    }
    return true;
}

inline std::size_t words_popcount(std::span<const Word> words) {
    std::size_t total = 0;
    for (Word w : words) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

/// A packed vector of bits over GF(2).
///
/// Bits past num_bits in the last word are always zero; every mutating
/// method preserves that, so word-level equality is bit-level equality.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t num_bits) : num_bits_(num_bits), words_(words_for_bits(num_bits), 0) {}

    std::size_t size() const { return num_bits_; }

    bool get(std::size_t k) const { return (words_[k / kWordBits] >> (k % kWordBits)) & 1; }
    void set(std::size_t k, bool value) {
        Word mask = Word{1} << (k % kWordBits);
        if (value) {
            words_[k / kWordBits] |= mask;
        } else {
            words_[k / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t k) { words_[k / kWordBits] ^= Word{1} << (k % kWordBits); }

    bool none() const { return words_all_zero(words_); }
    std::size_t popcount() const { return words_popcount(words_); }

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    /// True iff every bit past size() in the storage is zero.
    bool padding_is_clear() const;

   private:
    std::size_t num_bits_ = 0;
    std::vector<Word> words_;
};

/// A dense row-major bit matrix over GF(2). Each row is padded to whole
/// words; padding bits are kept at zero.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t num_rows, std::size_t num_cols)
        : num_rows_(num_rows),
          num_cols_(num_cols),
          stride_(words_for_bits(num_cols)),
          data_(num_rows * words_for_bits(num_cols), 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return num_rows_; }
    std::size_t cols() const { return num_cols_; }
    std::size_t stride() const { return stride_; }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool value) {
        Word &w = data_[r * stride_ + c / kWordBits];
        Word mask = Word{1} << (c % kWordBits);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    /// row(dst) ^= row(src).
    void xor_row(std::size_t dst, std::size_t src) {
        Word *d = data_.data() + dst * stride_;
        const Word *s = data_.data() + src * stride_;
        for (std::size_t k = 0; k < stride_; k++) {
            d[k] ^= s[k];
        }
    }
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const { return words_all_zero(row(r)); }

    BitVector row_vector(std::size_t r) const;
    void set_row(std::size_t r, const BitVector &bits);

    BitMatrix transposed() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t num_rows_ = 0;
    std::size_t num_cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Rank over GF(2) by plain row reduction of a copy.
std::size_t gf2_rank(BitMatrix m);

}  // namespace cph

#endif
