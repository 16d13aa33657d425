#pragma once

#include <string>
#include <vector>

#include "skewtensor/module.hpp"
#include "skewtensor/partition.hpp"

namespace skewtensor {

// Orbit representative under rotation by 180 degrees and the diagonal flip.
struct CanonicalShape {
  std::vector<Cell> cells;  // normalized to min i = min j = 1, sorted
  SkewPartition shape;      // the representative
  SkewPartition input;      // the shape canonicalize() was called with
  GroupSchemeParams params;  // minimal (r, s) for the representative
  std::size_t orbit_size = 1;

  std::size_t dim() const { return cells.size(); }
};

// The four images of the shape (with repetitions), each normalized.
std::vector<SkewPartition> symmetry_orbit(const SkewPartition& shape);
CanonicalShape canonicalize(const SkewPartition& shape);

// Connected skew diagrams with `dim` cells up to symmetry. An orbit is kept when
// its representative or the representative's transpose fits in (max_r, max_s).
std::vector<CanonicalShape> enumerate_shapes(std::size_t dim, int max_r = 30, int max_s = 30);

// Box drawing with i to the right and j upward; cells of mu are shaded with '#'.
std::string render_diagram(const SkewPartition& shape);

}  // namespace skewtensor
