#include "skewtensor/linalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace skewtensor {

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span_of(const BitMatrix& rows) {
  auto [reduced, pivots] = rref(rows);
  Subspace s(rows.cols());
  s.basis_ = select_rows(reduced, [&] {
    std::vector<std::size_t> keep(pivots.size());
    for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = k;
    return keep;
  }());
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span_of(std::span<const BitVector> vectors, std::size_t ambient_dim) {
  return span_of(BitMatrix::from_row_vectors(vectors, ambient_dim));
}

Subspace Subspace::whole(std::size_t ambient_dim) { return span_of(BitMatrix::identity(ambient_dim)); }

bool Subspace::contains(const BitVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  BitVector w = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (w.get(pivots_[k])) {
      auto src = basis_.row_words(k);
      auto dst = w.words();
      for (std::size_t t = 0; t < dst.size(); ++t) dst[t] ^= src[t];
    }
  }
  return w.is_zero();
}

BitVector Subspace::coordinates(const BitVector& v) const {
  BitVector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (v.get(pivots_[k])) c.set(k);
  }
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> is_pivot(ambient_dim_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    if (!is_pivot[i]) out.push_back(i);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Subspace::sum: ambient dimension mismatch");
  return span_of(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Subspace::intersect: ambient dimension mismatch");
  // Kernel of [U^T | W^T] gives pairs (a, b) with a·U = b·W.
  const BitMatrix stacked = vstack(basis_, other.basis_);
  const Subspace relations = nullspace(stacked.transpose());
  std::vector<BitVector> vectors;
  for (std::size_t k = 0; k < relations.dim(); ++k) {
    const BitVector rel = relations.vector(k);
    BitVector v(ambient_dim_);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (rel.get(i)) v ^= basis_.row(i);
    }
    vectors.push_back(std::move(v));
  }
  return span_of(vectors, ambient_dim_);
}

// ---------------------------------------------------------------------------
// EchelonBuilder

EchelonBuilder::EchelonBuilder(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

void EchelonBuilder::reduce(BitVector& v) const {
  auto w = v.words();
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word pending = w[k];
    while (pending != 0) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(pending));
      const std::size_t col = k * kWordBits + b;
      const Word above = ~((Word{1} << b) | ((Word{1} << b) - 1));
      const std::ptrdiff_t r = row_of_pivot_[col];
      if (r >= 0) {
        auto src = rows_[static_cast<std::size_t>(r)].words();
        for (std::size_t t = k; t < w.size(); ++t) w[t] ^= src[t];
        pending = w[k] & above;
      } else {
        pending &= above;
      }
    }
  }
}

bool EchelonBuilder::add(BitVector v) {
  if (v.size() != cols_) throw std::invalid_argument("EchelonBuilder::add: length mismatch");
  reduce(v);
  const std::size_t p = v.first_set();
  if (p == cols_) return false;
  row_of_pivot_[p] = static_cast<std::ptrdiff_t>(rows_.size());
  pivot_of_row_.push_back(p);
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonBuilder::add_words(std::span<const Word> row) {
  BitVector v(cols_);
  std::copy(row.begin(), row.end(), v.words().begin());
  return add(std::move(v));
}

Subspace EchelonBuilder::to_subspace() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  BitMatrix basis(rows_.size(), cols_);
  std::vector<std::size_t> pivots(rows_.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    basis.set_row(k, rows_[order[k]]);
    pivots[k] = pivot_of_row_[order[k]];
  }
  // Rows are echelon; clear bits above each pivot, last pivot first.
  for (std::size_t k = order.size(); k-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      if (basis.get(j, pivots[k])) basis.xor_row_into(k, j);
    }
  }
  Subspace s(cols_);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

namespace {

Subspace kernel_from_rref(const BitMatrix& reduced, const std::vector<std::size_t>& pivots, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVector> vectors;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols);
    v.set(f);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (reduced.get(k, f)) v.set(pivots[k]);
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span_of(vectors, cols);
}

}  // namespace

Subspace EchelonBuilder::kernel() const {
  const Subspace rs = to_subspace();
  return kernel_from_rref(rs.basis(), rs.pivots(), cols_);
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(BitMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  for (std::size_t c = 0; c < m.cols() && rank < rows; ++c) {
    const std::size_t wk = c / kWordBits;
    const Word bit = Word{1} << (c % kWordBits);
    std::size_t p = rank;
    while (p < rows && (m.row_words(p)[wk] & bit) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, rank);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != rank && (m.row_words(i)[wk] & bit) != 0) m.xor_row_into(rank, i);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
  EchelonBuilder eb(m.cols());
  for (std::size_t i = 0; i < m.rows() && eb.rank() < m.cols(); ++i) eb.add_words(m.row_words(i));
  return eb.rank();
}

Subspace nullspace(const BitMatrix& m) {
  EchelonBuilder eb(m.cols());
  for (std::size_t i = 0; i < m.rows() && eb.rank() < m.cols(); ++i) eb.add_words(m.row_words(i));
  return eb.kernel();
}

Subspace row_space(const BitMatrix& m) { return Subspace::span_of(m); }

Subspace column_space(const BitMatrix& m) { return Subspace::span_of(m.transpose()); }

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length does not match rows");
  BitMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    xor_shifted(aug.row_words(i), 0, a.row_words(i), a.cols());
    if (b.get(i)) aug.set(i, a.cols());
  }
  auto [reduced, pivots] = rref(std::move(aug));
  BitVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == a.cols()) return std::nullopt;
    if (reduced.get(k, a.cols())) x.set(pivots[k]);
  }
  return x;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  BitMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    xor_shifted(aug.row_words(i), 0, m.row_words(i), n);
    aug.set(i, n + i);
  }
  auto [reduced, pivots] = rref(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  BitMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reduced.get(i, n + j)) inv.set(i, j);
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Products

namespace {

BitMatrix mul_row_xor(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows(), b.cols());
  const std::size_t stride_b = b.stride();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ar = a.row_words(i);
    auto cr = c.row_words(i);
    for (std::size_t k = 0; k < ar.size(); ++k) {
      Word w = ar[k];
      while (w != 0) {
        const std::size_t l = k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        auto br = b.row_words(l);
        for (std::size_t t = 0; t < stride_b; ++t) cr[t] ^= br[t];
        w &= w - 1;
      }
    }
  }
  return c;
}

// Method of four Russians with 8-bit lookup tables.
BitMatrix mul_four_russians(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows(), b.cols());
  const std::size_t stride_b = b.stride();
  std::vector<Word> table(256 * stride_b);
  for (std::size_t g = 0; g < a.cols(); g += 8) {
    const std::size_t width = std::min<std::size_t>(8, a.cols() - g);
    std::fill(table.begin(), table.end(), 0);
    for (std::size_t combo = 1; combo < (std::size_t{1} << width); ++combo) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(combo));
      const std::size_t prev = combo & (combo - 1);
      auto br = b.row_words(g + low);
      for (std::size_t t = 0; t < stride_b; ++t) {
        table[combo * stride_b + t] = table[prev * stride_b + t] ^ br[t];
      }
    }
    const std::size_t wk = g / kWordBits;
    const std::size_t shift = g % kWordBits;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const std::size_t byte = static_cast<std::size_t>((a.row_words(i)[wk] >> shift) & 0xFFU);
      if (byte == 0) continue;
      auto cr = c.row_words(i);
      for (std::size_t t = 0; t < stride_b; ++t) cr[t] ^= table[byte * stride_b + t];
    }
  }
  return c;
}

}  // namespace

BitMatrix mul(const BitMatrix& a, const BitMatrix& b, MulAlgorithm algorithm) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimensions do not agree");
  return algorithm == MulAlgorithm::FourRussians ? mul_four_russians(a, b) : mul_row_xor(a, b);
}

BitVector mul(const BitMatrix& a, const BitVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("mul: vector length does not match columns");
  BitVector out(a.rows());
  auto vw = v.words();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row_words(i);
    Word acc = 0;
    for (std::size_t t = 0; t < r.size(); ++t) acc ^= r[t] & vw[t];
    if (std::popcount(acc) & 1) out.set(i);
  }
  return out;
}

BitMatrix power(const BitMatrix& m, std::size_t exponent) {
  if (!m.is_square()) throw std::invalid_argument("power: matrix is not square");
  BitMatrix result = BitMatrix::identity(m.rows());
  BitMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      if (!a.get(ia, ja)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        xor_shifted(k.row_words(ia * b.rows() + ib), ja * b.cols(), b.row_words(ib), b.cols());
      }
    }
  }
  return k;
}

BitMatrix direct_sum(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) xor_shifted(s.row_words(i), 0, a.row_words(i), a.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) xor_shifted(s.row_words(a.rows() + i), a.cols(), b.row_words(i), b.cols());
  return s;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  BitMatrix s(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    xor_shifted(s.row_words(i), 0, a.row_words(i), a.cols());
    xor_shifted(s.row_words(i), a.cols(), b.row_words(i), b.cols());
  }
  return s;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  BitMatrix s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) s.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) s.set_row(a.rows() + i, b.row(i));
  return s;
}

BitMatrix select_columns(const BitMatrix& m, std::span<const std::size_t> columns) {
  BitMatrix s(m.rows(), columns.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (m.get(i, columns[k])) s.set(i, k);
    }
  }
  return s;
}

BitMatrix select_rows(const BitMatrix& m, std::span<const std::size_t> rows) {
  BitMatrix s(rows.size(), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto src = m.row_words(rows[k]);
    std::copy(src.begin(), src.end(), s.row_words(k).begin());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Endomorphism helpers

BitMatrix stable_power(const BitMatrix& f) {
  if (!f.is_square()) throw std::invalid_argument("stable_power: matrix is not square");
  BitMatrix p = f;
  for (std::size_t e = 1; e < f.rows(); e <<= 1U) {
    p = mul(p, p);
    if (p.is_zero()) break;
  }
  return p;
}

std::pair<Subspace, Subspace> fitting_pair(const BitMatrix& f) {
  const BitMatrix p = stable_power(f);
  return {nullspace(p), column_space(p)};
}

bool is_nilpotent(const BitMatrix& f) { return stable_power(f).is_zero(); }

bool is_nilpotent(const BitMatrix& f, std::size_t exponent) { return power(f, exponent).is_zero(); }

bool is_invertible(const BitMatrix& f) { return f.is_square() && rank(f) == f.rows(); }

}  // namespace skewtensor
