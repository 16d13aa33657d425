#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skewtensor {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Dense bit vector over GF(2). Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  static BitVector unit(std::size_t size, std::size_t index);
  static BitVector from_string(std::string_view bits);  // "0110..."
  static BitVector random(std::size_t size, std::mt19937_64& rng);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool is_zero() const;
  std::size_t popcount() const;
  // Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Dense row-major bit-packed matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
  // Each string is one row of '0'/'1' characters.
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BitMatrix from_row_vectors(std::span<const BitVector> rows, std::size_t cols);
  static BitMatrix from_column_vectors(std::span<const BitVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    Word& w = words_[i * stride_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    if (value) {
      w |= mask;
    } else {
      w &= ~mask;
    }
  }
  void flip(std::size_t i, std::size_t j) { words_[i * stride_ + j / kWordBits] ^= Word{1} << (j % kWordBits); }

  std::span<Word> row_words(std::size_t i) { return {words_.data() + i * stride_, stride_}; }
  std::span<const Word> row_words(std::size_t i) const { return {words_.data() + i * stride_, stride_}; }

  BitVector row(std::size_t i) const;
  BitVector column(std::size_t j) const;
  void set_row(std::size_t i, const BitVector& v);
  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t i) const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t popcount() const;

  BitMatrix transpose() const;
  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
  bool operator==(const BitMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

// dst ^= src, bit-shifted so that src bit 0 lands on dst bit `offset`.
void xor_shifted(std::span<Word> dst, std::size_t offset, std::span<const Word> src, std::size_t nbits);

}  // namespace skewtensor
