#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewtensor/module.hpp"

namespace skewtensor {

// Thrown when a linear system would exceed the configured unknown budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxUnknowns = 20000;

struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<BitMatrix> basis;  // each target_dim x source_dim

  std::size_t dim() const { return basis.size(); }
};

bool is_homomorphism(const GradedModule& m, const GradedModule& n, const BitMatrix& t);

// Number of unknowns hom_space(m, n) would solve for.
std::size_t hom_unknowns(const GradedModule& m, const GradedModule& n);

// All module maps M -> N. A map is fixed by the images of the minimal
// generators of M, subject to the module generators of the relation module.
HomSpace hom_space(const GradedModule& m, const GradedModule& n, std::size_t max_unknowns = kDefaultMaxUnknowns);
// The plain commutation system T x_M = x_N T, T y_M = y_N T, one unknown per entry.
HomSpace hom_space_direct(const GradedModule& m, const GradedModule& n);
// Degree-preserving maps between graded modules, solved one degree block at a time.
HomSpace graded_hom_space(const GradedModule& m, const GradedModule& n);

// Linear combination of basis elements selected by the bits of `coefficients`.
BitMatrix combine(const HomSpace& h, const BitVector& coefficients);

}  // namespace skewtensor
