#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skewtensor/bitmatrix.hpp"

namespace skewtensor {

// A subspace of GF(2)^ambient_dim. The basis is kept in reduced row echelon
// form, so `pivots()[k]` is the leading column of basis row k and no other
// basis row has a bit there.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span_of(const BitMatrix& rows);
  static Subspace span_of(std::span<const BitVector> vectors, std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const BitMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  BitVector vector(std::size_t k) const { return basis_.row(k); }

  bool contains(const BitVector& v) const;
  // Coordinates of v with respect to basis(); meaningful only when contains(v).
  BitVector coordinates(const BitVector& v) const;
  // Standard basis indices that complete this subspace to the whole space.
  std::vector<std::size_t> complement_indices() const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
  }

 private:
  friend class EchelonBuilder;
  std::size_t ambient_dim_ = 0;
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Incremental row echelon form. Rows are reduced on insertion, so memory is
// bounded by cols^2 bits however many rows are fed in.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols);

  // Reduces v in place against the current rows; returns true if v was
  // independent (and has been added).
  bool add(BitVector v);
  bool add_words(std::span<const Word> row);
  void reduce(BitVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Subspace to_subspace() const;
  Subspace kernel() const;  // right kernel of the accumulated rows

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_pivot_;  // -1 if column is free
};

enum class MulAlgorithm { RowXor, FourRussians };

struct RrefResult {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(BitMatrix m);
std::size_t rank(const BitMatrix& m);
Subspace nullspace(const BitMatrix& m);
Subspace row_space(const BitMatrix& m);
Subspace column_space(const BitMatrix& m);

// Some x with A·x = b, or nullopt when inconsistent. Throws on size mismatch.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);
std::optional<BitMatrix> inverse(const BitMatrix& m);

BitMatrix mul(const BitMatrix& a, const BitMatrix& b, MulAlgorithm algorithm = MulAlgorithm::RowXor);
BitVector mul(const BitMatrix& a, const BitVector& v);
BitMatrix power(const BitMatrix& m, std::size_t exponent);
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
BitMatrix direct_sum(const BitMatrix& a, const BitMatrix& b);
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix select_columns(const BitMatrix& m, std::span<const std::size_t> columns);
BitMatrix select_rows(const BitMatrix& m, std::span<const std::size_t> rows);

// f^e with e >= n; kernel and image of that power split the space.
BitMatrix stable_power(const BitMatrix& f);
std::pair<Subspace, Subspace> fitting_pair(const BitMatrix& f);
bool is_nilpotent(const BitMatrix& f);
// True iff f^exponent == 0.
bool is_nilpotent(const BitMatrix& f, std::size_t exponent);
bool is_invertible(const BitMatrix& f);

}  // namespace skewtensor
