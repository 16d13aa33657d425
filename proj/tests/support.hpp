#pragma once

#include <vector>

#include "skewtensor/decompose.hpp"
#include "skewtensor/homology.hpp"

namespace support {

// Exact comparison of two modules after discarding free summands: decompose
// both and match the isomorphism classes with their multiplicities.
inline bool isomorphic_up_to_free(const skewtensor::GradedModule& a, const skewtensor::GradedModule& b,
                                  std::uint64_t seed = 1) {
  using namespace skewtensor;
  const auto da = decompose(strip_free(a));
  const auto db = decompose(strip_free(b));
  if (da.dims() != db.dims()) return false;
  std::vector<bool> used(db.summands.size(), false);
  for (const auto& sa : da.summands) {
    bool matched = false;
    for (std::size_t k = 0; k < db.summands.size() && !matched; ++k) {
      const auto& sb = db.summands[k];
      if (used[k] || sb.multiplicity != sa.multiplicity || sb.module.dim() != sa.module.dim()) continue;
      if (indecomposables_isomorphic(sa.module.ungraded(), sb.module.ungraded(), seed)) {
        used[k] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace support
