#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewtensor/module.hpp"

namespace skewtensor {

// Minimal projective cover. Free generator k maps to the standard basis vector
// generators[k] of M; column k*2^(r+s) + a*2^s + b of the surjection is x^a y^b of it.
struct CoverMap {
  GradedModule cover;
  BitMatrix surjection;  // dim M x dim cover
  std::vector<std::size_t> generators;
};

// Injective hull M -> free^h; `inclusion` is dim hull x dim M.
struct HullMap {
  GradedModule hull;
  BitMatrix inclusion;
};

Subspace rad_module(const GradedModule& m);
// Standard basis vectors completing rad M to the whole space.
std::vector<std::size_t> minimal_generator_indices(const GradedModule& m);
std::vector<BitVector> minimal_generators(const GradedModule& m);

CoverMap projective_cover(const GradedModule& m);
// Kernel of the cover surjection as a subspace of the cover.
Subspace syzygy_subspace(const CoverMap& cover);
// Module generators of the kernel, as vectors of the cover.
std::vector<BitVector> relation_generators(const CoverMap& cover);

GradedModule syzygy(const GradedModule& m);
HullMap injective_hull(const GradedModule& m);
GradedModule cosyzygy(const GradedModule& m);
GradedModule strip_free(const GradedModule& m);
// Omega^t up to free summands; negative t applies cosyzygies.
GradedModule omega_power(const GradedModule& m, int t);

struct OmegaProbeEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  std::string verdict;    // "isomorphic", "not_isomorphic", "inconclusive"
  std::string invariant;  // separating invariant when not isomorphic
  std::size_t dim_vi = 0;
  std::size_t dim_omega = 0;
};

struct OmegaProbeReport {
  std::vector<std::size_t> odd_dims;  // dim V_n for n = 1..i_max
  std::vector<OmegaProbeEntry> entries;
  std::size_t isomorphic = 0;
  std::size_t inconclusive = 0;
};

// Compares V_i with Omega^{-k}(V_j) for 2 <= i != j <= i_max and 1 <= k <= k_max,
// where V_n is the odd-dimensional summand of the n-th tensor power of v.
OmegaProbeReport omega_probe(const GradedModule& v, int i_max, int k_max, std::uint64_t seed = 1);

}  // namespace skewtensor
