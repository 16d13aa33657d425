#include "skewtensor/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewtensor {

namespace {

Word tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace

BitVector BitVector::unit(std::size_t size, std::size_t index) {
  BitVector v(size);
  v.set(index);
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::random(std::size_t size, std::mt19937_64& rng) {
  BitVector v(size);
  for (auto& w : v.words_) w = rng();
  if (!v.words_.empty()) v.words_.back() &= tail_mask(size);
  return v;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch in xor");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  if (cols == 0) return m;
  const Word mask = tail_mask(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = m.row_words(i);
    for (auto& w : r) w = rng();
    r.back() &= mask;
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  BitMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (auto row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged rows in BitMatrix::from_rows");
    m.set_row(i++, BitVector::from_string(row));
  }
  return m;
}

BitMatrix BitMatrix::from_row_vectors(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

BitMatrix BitMatrix::from_column_vectors(std::span<const BitVector> columns, std::size_t rows) {
  return from_row_vectors(columns, rows).transpose();
}

BitVector BitMatrix::row(std::size_t i) const {
  BitVector v(cols_);
  std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(i * stride_), stride_, v.words().begin());
  return v;
}

BitVector BitMatrix::column(std::size_t j) const {
  BitVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (get(i, j)) v.set(i);
  }
  return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch in BitMatrix::set_row");
  std::copy(v.words().begin(), v.words().end(), words_.begin() + static_cast<std::ptrdiff_t>(i * stride_));
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  const Word* s = words_.data() + src * stride_;
  Word* d = words_.data() + dst * stride_;
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(words_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   words_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   words_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BitMatrix::row_is_zero(std::size_t i) const {
  auto r = row_words(i);
  return std::all_of(r.begin(), r.end(), [](Word w) { return w == 0; });
}

bool BitMatrix::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool BitMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row_words(i);
    for (std::size_t k = 0; k < stride_; ++k) {
      const Word expected = (k == i / kWordBits) ? Word{1} << (i % kWordBits) : 0;
      if (r[k] != expected) return false;
    }
  }
  return true;
}

std::size_t BitMatrix::popcount() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row_words(i);
    for (std::size_t k = 0; k < stride_; ++k) {
      Word w = r[k];
      while (w != 0) {
        const std::size_t j = k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        t.set(j, i);
        w &= w - 1;
      }
    }
  }
  return t;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw std::invalid_argument("BitMatrix shape mismatch in +");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

void xor_shifted(std::span<Word> dst, std::size_t offset, std::span<const Word> src, std::size_t nbits) {
  if (nbits == 0) return;
  const std::size_t nwords = words_for(nbits);
  const std::size_t word_off = offset / kWordBits;
  const std::size_t bit_off = offset % kWordBits;
  for (std::size_t k = 0; k < nwords; ++k) {
    Word w = src[k];
    if (k + 1 == nwords) w &= tail_mask(nbits);
    if (w == 0) continue;
    dst[word_off + k] ^= w << bit_off;
    if (bit_off != 0 && word_off + k + 1 < dst.size()) dst[word_off + k + 1] ^= w >> (kWordBits - bit_off);
  }
}

}  // namespace skewtensor
