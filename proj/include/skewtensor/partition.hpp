#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewtensor {

// A diagram cell: `i` indexes the part (the x direction), `j` the position
// inside the part (the y direction). Both start at 1.
struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Skew partition lambda/mu. Part i holds the cells (i, j) with mu_i < j <= lambda_i.
class SkewPartition {
 public:
  SkewPartition() = default;
  explicit SkewPartition(std::vector<int> lambda, std::vector<int> mu = {});

  // "5,4,2,2,1,1/3,2"
  static SkewPartition parse(std::string_view text);
  // Any order-convex cell set; the result is translated so that min i = min j = 1.
  static SkewPartition from_cells(std::span<const Cell> cells);

  const std::vector<int>& lambda() const { return lambda_; }
  const std::vector<int>& mu() const { return mu_; }
  int mu_at(std::size_t part) const { return part < mu_.size() ? mu_[part] : 0; }
  std::size_t num_parts() const { return lambda_.size(); }

  std::vector<Cell> cells() const;  // sorted lexicographically by (i, j)
  std::size_t size() const;

  int max_part_length() const;     // bounded by 2^s
  int max_column_height() const;   // bounded by 2^r

  std::string to_string() const;
  bool operator==(const SkewPartition&) const = default;

 private:
  std::vector<int> lambda_;
  std::vector<int> mu_;
};

bool is_connected(const SkewPartition& shape);
bool is_connected(std::span<const Cell> cells);

// Transposed diagram (i, j) -> (j, i); swaps the roles of r and s.
SkewPartition flip_diagonal(const SkewPartition& shape);
// 180-degree rotation of the diagram inside its bounding box.
SkewPartition rotate_180(const SkewPartition& shape);
// Drops empty boundary parts and shifts so that min i = min j = 1.
SkewPartition normalized(const SkewPartition& shape);

// The m-staircase (m, m-1, ..., 1)/(m-2, ..., 1).
SkewPartition staircase(int m);

}  // namespace skewtensor
