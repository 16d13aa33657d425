#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "skewtensor/hom.hpp"
#include "skewtensor/module.hpp"

namespace skewtensor {

enum class IsoKind { Isomorphic, NotIsomorphic, Inconclusive };
std::string to_string(IsoKind kind);

struct IsoVerdict {
  IsoKind kind = IsoKind::Inconclusive;
  std::optional<BitMatrix> witness;  // set iff isomorphic; maps M to N
  std::string invariant;             // separating invariant when not isomorphic
  std::string values;                // the differing values, "lhs vs rhs"
  std::size_t tries = 0;
};

struct IsoOptions {
  std::uint64_t seed = 1;
  std::size_t max_tries = 64;
  // Compare Hilbert functions up to translation. Only sound when both modules
  // are indecomposable, since then an ungraded isomorphism is graded up to shift.
  bool compare_hilbert = false;
  std::size_t max_unknowns = kDefaultMaxUnknowns;
};

bool verify_witness(const GradedModule& m, const GradedModule& n, const BitMatrix& t);

IsoVerdict iso_test(const GradedModule& m, const GradedModule& n, const IsoOptions& options);
IsoVerdict iso_test(const GradedModule& m, const GradedModule& n, std::uint64_t seed = 1, std::size_t max_tries = 64);

}  // namespace skewtensor
