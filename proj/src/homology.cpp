#include "skewtensor/homology.hpp"

#include "skewtensor/decompose.hpp"
#include "skewtensor/iso.hpp"
#include "skewtensor/powerlab.hpp"

namespace skewtensor {

Subspace rad_module(const GradedModule& m) { return Subspace::span_of(vstack(m.x().transpose(), m.y().transpose())); }

std::vector<std::size_t> minimal_generator_indices(const GradedModule& m) { return rad_module(m).complement_indices(); }

std::vector<BitVector> minimal_generators(const GradedModule& m) {
  std::vector<BitVector> out;
  for (std::size_t i : minimal_generator_indices(m)) out.push_back(BitVector::unit(m.dim(), i));
  return out;
}

CoverMap projective_cover(const GradedModule& m) {
  const auto& p = m.params();
  const std::size_t nx = p.x_order(), ny = p.y_order(), f = p.free_dim();
  auto gens = minimal_generator_indices(m);
  const std::size_t g = gens.size();
  const GradedModule free = free_module(p, g);

  std::vector<BitVector> cols;
  cols.reserve(g * f);
  for (std::size_t k = 0; k < g; ++k) {
    BitVector xa = BitVector::unit(m.dim(), gens[k]);
    for (std::size_t a = 0; a < nx; ++a) {
      BitVector v = xa;
      for (std::size_t b = 0; b < ny; ++b) {
        cols.push_back(v);
        v = mul(m.y(), v);
      }
      xa = mul(m.x(), xa);
    }
  }
  BitMatrix surjection = BitMatrix::from_column_vectors(cols, m.dim());
  if (cols.empty()) surjection = BitMatrix(m.dim(), 0);

  std::optional<std::vector<Degree>> grading;
  if (m.is_graded()) {
    grading.emplace();
    for (std::size_t k = 0; k < g; ++k) {
      const Degree base = (*m.grading())[gens[k]];
      for (std::size_t a = 0; a < nx; ++a) {
        for (std::size_t b = 0; b < ny; ++b) grading->push_back(base + Degree{static_cast<int>(a), static_cast<int>(b)});
      }
    }
  }
  return {GradedModule(p, free.x(), free.y(), std::move(grading)), std::move(surjection), std::move(gens)};
}

Subspace syzygy_subspace(const CoverMap& cover) { return nullspace(cover.surjection); }

std::vector<BitVector> relation_generators(const CoverMap& cover) {
  const Subspace kernel = syzygy_subspace(cover);
  const std::size_t n = cover.cover.dim();
  EchelonBuilder eb(n);
  for (std::size_t k = 0; k < kernel.dim(); ++k) {
    const BitVector v = kernel.vector(k);
    eb.add(mul(cover.cover.x(), v));
    eb.add(mul(cover.cover.y(), v));
  }
  std::vector<BitVector> out;
  for (std::size_t k = 0; k < kernel.dim(); ++k) {
    BitVector v = kernel.vector(k);
    if (eb.add(v)) out.push_back(kernel.vector(k));
  }
  return out;
}

GradedModule syzygy(const GradedModule& m) {
  const CoverMap c = projective_cover(m);
  return restrict(c.cover, syzygy_subspace(c));
}

HullMap injective_hull(const GradedModule& m) {
  const CoverMap c = projective_cover(dual_alpha(m));
  return {dual_alpha(c.cover), c.surjection.transpose()};
}

GradedModule cosyzygy(const GradedModule& m) { return dual_alpha(syzygy(dual_alpha(m))); }

GradedModule strip_free(const GradedModule& m) { return peel_free(m).complement; }

GradedModule omega_power(const GradedModule& m, int t) {
  GradedModule cur = strip_free(m);
  for (int step = 0; step < (t < 0 ? -t : t); ++step) cur = strip_free(t > 0 ? syzygy(cur) : cosyzygy(cur));
  return cur;
}

OmegaProbeReport omega_probe(const GradedModule& v, int i_max, int k_max, std::uint64_t seed) {
  OmegaProbeReport report;
  const auto odd = odd_summand_modules(v, TensorStructure::Alpha, i_max, seed);
  for (const auto& m : odd) report.odd_dims.push_back(m.dim());
  const auto count = static_cast<int>(odd.size());
  for (int j = 2; j <= count; ++j) {
    GradedModule w = strip_free(odd[static_cast<std::size_t>(j - 1)]);
    for (int k = 1; k <= k_max; ++k) {
      w = strip_free(cosyzygy(w));
      for (int i = 2; i <= count; ++i) {
        if (i == j) continue;
        const auto& vi = odd[static_cast<std::size_t>(i - 1)];
        IsoOptions o;
        o.seed = seed;
        o.compare_hilbert = true;  // both sides are indecomposable
        const IsoVerdict verdict = iso_test(vi, w, o);
        OmegaProbeEntry e{i, j, k, to_string(verdict.kind), verdict.invariant, vi.dim(), w.dim()};
        if (verdict.kind == IsoKind::Isomorphic) ++report.isomorphic;
        if (verdict.kind == IsoKind::Inconclusive) ++report.inconclusive;
        report.entries.push_back(std::move(e));
      }
    }
  }
  return report;
}

}  // namespace skewtensor
