#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewtensor/bitmatrix.hpp"
#include "skewtensor/linalg.hpp"
#include "skewtensor/partition.hpp"

namespace skewtensor {

// x^(2^r) = 0, y^(2^s) = 0.
struct GroupSchemeParams {
  int r = 1;
  int s = 1;

  std::size_t x_order() const { return std::size_t{1} << r; }
  std::size_t y_order() const { return std::size_t{1} << s; }
  std::size_t free_dim() const { return x_order() * y_order(); }
  bool operator==(const GroupSchemeParams&) const = default;
};

// Smallest params whose box constraint admits the shape.
GroupSchemeParams minimal_params(const SkewPartition& shape);
bool fits(const SkewPartition& shape, GroupSchemeParams params);

struct Degree {
  int i = 0;
  int j = 0;
  auto operator<=>(const Degree&) const = default;
  Degree operator+(Degree o) const { return {i + o.i, j + o.j}; }
  Degree operator-(Degree o) const { return {i - o.i, j - o.j}; }
  Degree operator-() const { return {-i, -j}; }
};

enum class TensorStructure { Alpha, Group };
std::string to_string(TensorStructure s);
TensorStructure parse_structure(const std::string& text);

// A module over k[x,y]/(x^(2^r), y^(2^s)), given by the matrices of x and y
// acting on column vectors. Optionally Z^2-graded, x of degree (1,0) and y of
// degree (0,1).
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(GroupSchemeParams params, BitMatrix x, BitMatrix y, std::optional<std::vector<Degree>> grading = std::nullopt);

  const GroupSchemeParams& params() const { return params_; }
  std::size_t dim() const { return x_.rows(); }
  const BitMatrix& x() const { return x_; }
  const BitMatrix& y() const { return y_; }
  bool is_graded() const { return grading_.has_value(); }
  const std::optional<std::vector<Degree>>& grading() const { return grading_; }
  GradedModule ungraded() const { return GradedModule(params_, x_, y_); }

  // Empty when the module axioms hold, otherwise a description of the first failure.
  std::optional<std::string> axiom_violation() const;
  void check_axioms() const;  // throws std::logic_error

  // Matrix of x^a y^b.
  BitMatrix monomial(std::size_t a, std::size_t b) const;

 private:
  GroupSchemeParams params_;
  BitMatrix x_;
  BitMatrix y_;
  std::optional<std::vector<Degree>> grading_;
};

GradedModule zero_module(GroupSchemeParams params);
GradedModule trivial_module(GroupSchemeParams params);
// Regular module (rank 1) or a direct sum of `rank` copies. Basis index of x^a y^b g_k
// is k*2^(r+s) + a*2^s + b, in degree (a+1, b+1).
GradedModule free_module(GroupSchemeParams params, std::size_t rank = 1);

// One basis vector per cell, sorted by (i, j); x moves to (i+1, j), y to (i, j+1).
GradedModule from_skew_partition(const SkewPartition& shape, GroupSchemeParams params);

GradedModule tensor_alpha(const GradedModule& v, const GradedModule& w);
GradedModule tensor_group(const GradedModule& v, const GradedModule& w);
GradedModule tensor(const GradedModule& v, const GradedModule& w, TensorStructure structure);
GradedModule dual_alpha(const GradedModule& v);
GradedModule dual_group(const GradedModule& v);
GradedModule dual(const GradedModule& v, TensorStructure structure);
GradedModule direct_sum(const GradedModule& v, const GradedModule& w);
GradedModule direct_sum(std::span<const GradedModule> parts, GroupSchemeParams params);

// Smallest x,y-invariant subspace containing the seeds.
Subspace spin(const GradedModule& m, std::span<const BitVector> seeds);
bool is_invariant(const GradedModule& m, const Subspace& s);
// The submodule on an invariant subspace, in the subspace's stored basis.
GradedModule restrict(const GradedModule& m, const Subspace& s);

// rank(x^a y^b) for 0 <= a < 2^r, 0 <= b < 2^s, indexed a * 2^s + b.
std::vector<std::size_t> rank_table(const GradedModule& m);
std::map<Degree, std::size_t> hilbert_function(const GradedModule& m);
// Hilbert function translated so that its least degree is (0,0); empty for ungraded input.
std::map<Degree, std::size_t> normalized_hilbert_function(const GradedModule& m);

// Degree of a homogeneous vector, nullopt when the vector is zero or mixes degrees.
std::optional<Degree> homogeneous_degree(const GradedModule& m, const BitVector& v);

}  // namespace skewtensor
