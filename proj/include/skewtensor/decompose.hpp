#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewtensor/hom.hpp"
#include "skewtensor/module.hpp"

namespace skewtensor {

// Ordered from weakest to strongest.
enum class CertificateLevel { Heuristic, BasisLocalSplit, LocalExact, DimEndOne };
std::string to_string(CertificateLevel level);

struct Certificate {
  CertificateLevel level = CertificateLevel::Heuristic;
  std::size_t tries = 0;
  std::string details;
};

struct Summand {
  GradedModule module;
  std::size_t multiplicity = 1;
  Certificate certificate;
  bool free = false;
};

struct Decomposition {
  std::vector<Summand> summands;
  std::size_t total_dim = 0;
  std::optional<std::size_t> odd_summand;  // index into summands
  bool partial = false;
  std::uint64_t seed = 0;
  double seconds = 0;
  std::vector<std::string> warnings;

  // Summand dimensions repeated by multiplicity, sorted ascending.
  std::vector<std::size_t> dims() const;
};

struct DecomposeOptions {
  bool graded_first = true;
  std::uint64_t seed = 1;
  std::size_t max_tries = 0;  // per piece; 0 means 64 * dim End
  std::size_t max_unknowns = kDefaultMaxUnknowns;
  // Prove End local by showing the non-identity part of the basis spans a nilpotent algebra.
  bool exact = true;
  // Merge isomorphic summands into one entry with a multiplicity.
  bool group_classes = true;
};

std::size_t free_rank(const GradedModule& m);

struct FreePeel {
  std::size_t rank = 0;
  GradedModule complement;
};
FreePeel peel_free(const GradedModule& m);

// Randomized Fitting splitting over the ungraded endomorphism ring.
Decomposition fitting_chop(const GradedModule& m, std::uint64_t seed = 1, std::size_t max_tries = 0);
Decomposition decompose(const GradedModule& m, const DecomposeOptions& options = {});

Certificate indecomposability_certificate(const GradedModule& m, bool exact = false,
                                          std::size_t max_unknowns = kDefaultMaxUnknowns);

// True when 1 + span{b + e_b 1} describes a local algebra: each basis element
// is e_b 1 plus a nilpotent, and those nilpotent parts generate a nilpotent algebra.
bool endomorphisms_local_exact(const HomSpace& end);

// Decides whether two modules with local endomorphism rings are isomorphic.
// Returns a witness when they are.
std::optional<BitMatrix> indecomposables_isomorphic(const GradedModule& a, const GradedModule& b, std::uint64_t seed,
                                                    std::size_t max_unknowns = kDefaultMaxUnknowns);

}  // namespace skewtensor
