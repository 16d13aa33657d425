#include "skewtensor/powerlab.hpp"

#include <algorithm>

#include <chrono>

#include "skewtensor/random.hpp"

namespace skewtensor {

namespace {

std::size_t pow_mod(std::size_t base, int exp, std::size_t mod) {
  std::size_t r = 1 % mod;
  for (int k = 0; k < exp; ++k) r = (r * (base % mod)) % mod;
  return r;
}

std::size_t trivial_multiplicity(const Decomposition& d) {
  std::size_t n = 0;
  for (const auto& s : d.summands) {
    if (s.module.dim() == 1) n += s.multiplicity;
  }
  return n;
}

// Exactly one odd class, of multiplicity one, and every other summand of dimension 0 mod 4.
bool odd_plus_div4(const Decomposition& d) {
  std::size_t odd = 0;
  for (const auto& s : d.summands) {
    if (s.module.dim() % 2 == 1) {
      odd += s.multiplicity;
    } else if (s.module.dim() % 4 != 0) {
      return false;
    }
  }
  return odd == 1;
}

}  // namespace

NextOdd next_odd(const GradedModule& v_prev, const GradedModule& v, TensorStructure structure, int n, std::uint64_t seed,
                 const DecomposeOptions& options) {
  if (v_prev.dim() % 2 == 0) throw std::invalid_argument("next_odd: previous module must be odd-dimensional");
  const auto start = std::chrono::steady_clock::now();
  GradedModule m = tensor(v_prev, v, structure);
  DecomposeOptions o = options;
  o.seed = seed;
  Decomposition d = decompose(m, o);

  StepReport r;
  r.n = n;
  r.tensor_dim = m.dim();
  r.partial = d.partial;
  r.warnings = d.warnings;
  std::size_t odd_classes = 0;
  for (const auto& s : d.summands) {
    if (s.free) r.free_rank = s.multiplicity;
    if (s.module.dim() % 2 == 1) {
      ++odd_classes;
    } else {
      r.even_dims.insert(r.even_dims.end(), s.multiplicity, s.module.dim());
    }
  }
  if (odd_classes != 1 || d.summands[*d.odd_summand].multiplicity != 1) {
    std::string what = "step " + std::to_string(n) + ": " + std::to_string(odd_classes) + " odd-dimensional summand classes";
    if (odd_classes == 1) what += " with multiplicity " + std::to_string(d.summands[*d.odd_summand].multiplicity);
    throw ConjectureViolation(what, n, std::move(m), std::move(d));
  }
  r.unique_odd = true;
  r.others_div4 = true;
  for (auto e : r.even_dims) r.others_div4 = r.others_div4 && (e % 4 == 0);
  std::sort(r.even_dims.begin(), r.even_dims.end());
  // Callers stepping through V_n replace this with the check against (dim V)^n.
  r.mod4_congruent = (v_prev.dim() * v.dim()) % 4 == d.summands[*d.odd_summand].module.dim() % 4;
  NextOdd out{d.summands[*d.odd_summand].module, std::move(r), std::move(d)};
  out.report.odd_dim = out.odd.dim();
  out.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<long long> PowerRun::values() const {
  std::vector<long long> out;
  for (const auto& [n, d] : sequence) out.push_back(static_cast<long long>(d));
  return out;
}

bool PowerRun::all_flags_hold() const {
  if (failed_step) return false;
  for (const auto& s : steps) {
    if (!s.unique_odd || !s.others_div4 || !s.mod4_congruent) return false;
    if (s.trivial_multiplicity_one && !*s.trivial_multiplicity_one) return false;
    if (s.full_power_split && !*s.full_power_split) return false;
  }
  return true;
}

PowerRun pv_sequence(const GradedModule& v, TensorStructure structure, int n_max, std::uint64_t seed,
                     const PowerOptions& options) {
  if (v.dim() % 2 == 0) throw std::invalid_argument("pv_sequence: module must be odd-dimensional");
  const auto start = std::chrono::steady_clock::now();
  PowerRun run;
  run.params = v.params();
  run.structure = structure;
  run.n_max = n_max;
  run.seed = seed;
  if (n_max < 1) return run;

  StepReport first;
  first.n = 1;
  first.tensor_dim = v.dim();
  first.odd_dim = v.dim();
  first.unique_odd = first.others_div4 = first.mod4_congruent = true;
  if (v.dim() <= options.full_power_max_dim) {
    DecomposeOptions o = options.decompose;
    o.seed = split_seed(seed, 501);
    first.full_power_split = odd_plus_div4(decompose(v, o));
  }
  run.sequence.push_back({1, v.dim()});
  run.steps.push_back(first);

  GradedModule cur = v;
  GradedModule full = v;
  bool full_tracked = true;
  for (int n = 2; n <= n_max; ++n) {
    NextOdd step;
    try {
      step = next_odd(cur, v, structure, n, split_seed(seed, static_cast<std::uint64_t>(n)), options.decompose);
    } catch (const ConjectureViolation& e) {
      run.failed_step = n;
      run.failure = e.what();
      run.failure_evidence = e.evidence();
      break;
    }
    StepReport& r = step.report;
    r.mod4_congruent = pow_mod(v.dim(), n, 4) == r.odd_dim % 4;
    if (n == 2 && options.check_trivial_multiplicity) {
      DecomposeOptions o = options.decompose;
      o.seed = split_seed(seed, 1);
      const Decomposition vv = decompose(tensor(v, dual(v, structure), structure), o);
      r.trivial_multiplicity_one = trivial_multiplicity(vv) == 1;
    }
    if (full_tracked && full.dim() * v.dim() <= options.full_power_max_dim) {
      full = tensor(full, v, structure);
      DecomposeOptions o = options.decompose;
      o.seed = split_seed(seed, 500 + static_cast<std::uint64_t>(n));
      r.full_power_split = odd_plus_div4(decompose(full, o));
    } else {
      full_tracked = false;
    }
    if (r.partial) run.partial = true;
    run.sequence.push_back({n, r.odd_dim});
    run.steps.push_back(r);
    cur = std::move(step.odd);
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

PowerRun pv_sequence(const SkewPartition& shape, GroupSchemeParams params, TensorStructure structure, int n_max,
                     std::uint64_t seed, const PowerOptions& options) {
  PowerRun run = pv_sequence(from_skew_partition(shape, params), structure, n_max, seed, options);
  run.shape = shape;
  return run;
}

std::vector<GradedModule> odd_summand_modules(const GradedModule& v, TensorStructure structure, int n_max, std::uint64_t seed) {
  std::vector<GradedModule> out;
  if (n_max < 1) return out;
  out.push_back(v);
  for (int n = 2; n <= n_max; ++n) {
    out.push_back(next_odd(out.back(), v, structure, n, split_seed(seed, static_cast<std::uint64_t>(n))).odd);
  }
  return out;
}

StructureComparison compare_structures(const SkewPartition& shape, GroupSchemeParams params, int n_max, std::uint64_t seed) {
  StructureComparison cmp;
  const GradedModule v = from_skew_partition(shape, params);
  DecomposeOptions o;
  o.seed = seed;
  {
    StructureStep s;
    s.n = 0;
    s.alpha_dims = decompose(tensor_alpha(v, dual_alpha(v)), o).dims();
    s.group_dims = decompose(tensor_group(v, dual_group(v)), o).dims();
    s.equal = s.alpha_dims == s.group_dims;
    cmp.all_equal = cmp.all_equal && s.equal;
    cmp.steps.push_back(std::move(s));
  }
  if (v.dim() % 2 == 0) return cmp;
  GradedModule va = v, vg = v.ungraded();
  for (int n = 2; n <= n_max; ++n) {
    const std::uint64_t step_seed = split_seed(seed, static_cast<std::uint64_t>(n));
    StructureStep s;
    s.n = n;
    NextOdd a = next_odd(va, v, TensorStructure::Alpha, n, step_seed);
    NextOdd g = next_odd(vg, v, TensorStructure::Group, n, step_seed);
    s.alpha_dims = a.decomposition.dims();
    s.group_dims = g.decomposition.dims();
    s.equal = s.alpha_dims == s.group_dims;
    cmp.all_equal = cmp.all_equal && s.equal;
    cmp.steps.push_back(std::move(s));
    va = std::move(a.odd);
    vg = std::move(g.odd);
  }
  return cmp;
}

}  // namespace skewtensor
