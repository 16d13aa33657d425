#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewtensor/decompose.hpp"
#include "skewtensor/module.hpp"
#include "skewtensor/partition.hpp"

namespace skewtensor {

struct StepReport {
  int n = 0;
  std::size_t tensor_dim = 0;  // dim of V_{n-1} (x) V
  std::size_t odd_dim = 0;     // dim V_n
  std::vector<std::size_t> even_dims;  // with multiplicity, frees included
  std::size_t free_rank = 0;
  bool unique_odd = false;
  bool others_div4 = false;
  bool mod4_congruent = false;  // (dim V)^n == dim V_n mod 4
  std::optional<bool> trivial_multiplicity_one;  // n = 2: k occurs exactly once in V (x) V*
  std::optional<bool> full_power_split;  // V^(x)n is one odd summand plus summands of dim 0 mod 4
  bool partial = false;
  double seconds = 0;
  std::vector<std::string> warnings;
};

// More or fewer than one odd-dimensional summand class, or an odd class of multiplicity > 1.
class ConjectureViolation : public std::runtime_error {
 public:
  ConjectureViolation(const std::string& what, int n, GradedModule tensor, Decomposition evidence)
      : std::runtime_error(what), n_(n), tensor_(std::move(tensor)), evidence_(std::move(evidence)) {}
  int n() const { return n_; }
  const GradedModule& tensor() const { return tensor_; }
  const Decomposition& evidence() const { return evidence_; }

 private:
  int n_;
  GradedModule tensor_;
  Decomposition evidence_;
};

struct PowerOptions {
  DecomposeOptions decompose;
  // V^(x)n is decomposed directly while its dimension stays within this bound.
  std::size_t full_power_max_dim = 125;
  bool check_trivial_multiplicity = true;
};

struct NextOdd {
  GradedModule odd;
  StepReport report;
  Decomposition decomposition;
};

// Decomposes V_prev (x) V and returns its unique odd-dimensional summand.
NextOdd next_odd(const GradedModule& v_prev, const GradedModule& v, TensorStructure structure, int n, std::uint64_t seed,
                 const DecomposeOptions& options = {});

struct PowerRun {
  SkewPartition shape;
  GroupSchemeParams params;
  TensorStructure structure = TensorStructure::Alpha;
  int n_max = 0;
  std::uint64_t seed = 1;
  std::vector<std::pair<int, std::size_t>> sequence;  // (n, dim V_n)
  std::vector<StepReport> steps;
  std::optional<int> failed_step;
  std::string failure;
  std::optional<Decomposition> failure_evidence;
  bool partial = false;
  double seconds = 0;

  std::vector<long long> values() const;
  bool all_flags_hold() const;
};

PowerRun pv_sequence(const SkewPartition& shape, GroupSchemeParams params, TensorStructure structure, int n_max,
                     std::uint64_t seed = 1, const PowerOptions& options = {});
PowerRun pv_sequence(const GradedModule& v, TensorStructure structure, int n_max, std::uint64_t seed = 1,
                     const PowerOptions& options = {});

// V_1 = V, ..., V_{n_max}.
std::vector<GradedModule> odd_summand_modules(const GradedModule& v, TensorStructure structure, int n_max,
                                              std::uint64_t seed = 1);

struct StructureStep {
  int n = 0;  // 0 stands for V (x) V*
  std::vector<std::size_t> alpha_dims;
  std::vector<std::size_t> group_dims;
  bool equal = false;
};

struct StructureComparison {
  std::vector<StructureStep> steps;
  bool all_equal = true;
};

// V (x) V* in both structures, then V_{n-1} (x) V for n = 2..n_max.
StructureComparison compare_structures(const SkewPartition& shape, GroupSchemeParams params, int n_max,
                                       std::uint64_t seed = 1);

}  // namespace skewtensor
