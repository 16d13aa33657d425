#include "skewtensor/hom.hpp"

#include <map>

#include "skewtensor/homology.hpp"

namespace skewtensor {

namespace {

void require_same_params(const GradedModule& m, const GradedModule& n) {
  if (!(m.params() == n.params())) throw std::invalid_argument("hom: modules are over different group schemes");
}

std::vector<BitMatrix> monomials(const GradedModule& n) {
  const std::size_t nx = n.params().x_order(), ny = n.params().y_order();
  std::vector<BitMatrix> out;
  out.reserve(nx * ny);
  BitMatrix xa = BitMatrix::identity(n.dim());
  for (std::size_t a = 0; a < nx; ++a) {
    BitMatrix xy = xa;
    for (std::size_t b = 0; b < ny; ++b) {
      out.push_back(xy);
      if (b + 1 < ny) xy = mul(xy, n.y());
    }
    if (a + 1 < nx) xa = mul(xa, n.x());
  }
  return out;
}

}  // namespace

bool is_homomorphism(const GradedModule& m, const GradedModule& n, const BitMatrix& t) {
  if (t.rows() != n.dim() || t.cols() != m.dim()) return false;
  return mul(t, m.x()) == mul(n.x(), t) && mul(t, m.y()) == mul(n.y(), t);
}

std::size_t hom_unknowns(const GradedModule& m, const GradedModule& n) {
  return minimal_generator_indices(m).size() * n.dim();
}

HomSpace hom_space(const GradedModule& m, const GradedModule& n, std::size_t max_unknowns) {
  require_same_params(m, n);
  HomSpace h{m.dim(), n.dim(), {}};
  if (m.dim() == 0 || n.dim() == 0) return h;

  const CoverMap c = projective_cover(m);
  const std::size_t g = c.generators.size();
  const std::size_t dn = n.dim();
  const std::size_t f = m.params().free_dim();
  const std::size_t unknowns = g * dn;
  if (unknowns > max_unknowns) {
    throw ResourceLimit("hom_space: " + std::to_string(unknowns) + " unknowns exceeds the limit of " + std::to_string(max_unknowns));
  }
  const auto mono = monomials(n);

  // Relation kappa imposes sum_k sum_{kappa_{k,ab}=1} x^a y^b n_k = 0.
  EchelonBuilder eb(unknowns);
  for (const auto& rel : relation_generators(c)) {
    if (eb.rank() == unknowns) break;
    std::vector<BitMatrix> blocks(g);
    std::vector<bool> used(g, false);
    for (std::size_t col = rel.first_set(); col < rel.size(); ++col) {
      if (!rel.get(col)) continue;
      const std::size_t k = col / f;
      if (!used[k]) {
        blocks[k] = BitMatrix(dn, dn);
        used[k] = true;
      }
      blocks[k] += mono[col % f];
    }
    BitVector row(unknowns);
    for (std::size_t p = 0; p < dn; ++p) {
      for (auto& w : row.words()) w = 0;
      for (std::size_t k = 0; k < g; ++k) {
        if (used[k]) xor_shifted(row.words(), k * dn, blocks[k].row_words(p), dn);
      }
      if (!row.is_zero()) eb.add(row);
    }
  }
  const Subspace kernel = eb.kernel();
  if (kernel.dim() == 0) return h;

  // T is determined on an invertible set of cover columns: T P_S = Q_S.
  const auto pivots = rref(c.surjection).pivots;
  const BitMatrix ps = select_columns(c.surjection, pivots);
  const auto ps_inv = inverse(ps);
  if (!ps_inv) throw std::logic_error("hom_space: cover surjection is not onto");

  for (std::size_t v = 0; v < kernel.dim(); ++v) {
    const BitVector sol = kernel.vector(v);
    std::vector<BitVector> images(g, BitVector(dn));
    for (std::size_t k = 0; k < g; ++k) {
      for (std::size_t q = 0; q < dn; ++q) {
        if (sol.get(k * dn + q)) images[k].set(q);
      }
    }
    std::vector<BitVector> cols;
    cols.reserve(pivots.size());
    for (std::size_t col : pivots) cols.push_back(mul(mono[col % f], images[col / f]));
    const BitMatrix qs = BitMatrix::from_column_vectors(cols, dn);
    h.basis.push_back(mul(qs, *ps_inv));
  }
  return h;
}

HomSpace hom_space_direct(const GradedModule& m, const GradedModule& n) {
  require_same_params(m, n);
  const std::size_t dm = m.dim(), dn = n.dim();
  HomSpace h{dm, dn, {}};
  if (dm == 0 || dn == 0) return h;
  const std::size_t unknowns = dm * dn;
  EchelonBuilder eb(unknowns);
  const BitMatrix* zm[2] = {&m.x(), &m.y()};
  const BitMatrix* zn[2] = {&n.x(), &n.y()};
  for (int op = 0; op < 2; ++op) {
    for (std::size_t p = 0; p < dn; ++p) {
      for (std::size_t q = 0; q < dm; ++q) {
        BitVector row(unknowns);
        for (std::size_t l = 0; l < dm; ++l) {
          if (zm[op]->get(l, q)) row.flip(p * dm + l);
        }
        for (std::size_t k = 0; k < dn; ++k) {
          if (zn[op]->get(p, k)) row.flip(k * dm + q);
        }
        if (!row.is_zero()) eb.add(std::move(row));
      }
    }
  }
  const Subspace kernel = eb.kernel();
  for (std::size_t v = 0; v < kernel.dim(); ++v) {
    const BitVector sol = kernel.vector(v);
    BitMatrix t(dn, dm);
    for (std::size_t p = 0; p < dn; ++p) {
      for (std::size_t q = 0; q < dm; ++q) {
        if (sol.get(p * dm + q)) t.set(p, q);
      }
    }
    h.basis.push_back(std::move(t));
  }
  return h;
}

HomSpace graded_hom_space(const GradedModule& m, const GradedModule& n) {
  require_same_params(m, n);
  if (!m.is_graded() || !n.is_graded()) throw std::invalid_argument("graded_hom_space: both modules must be graded");
  const std::size_t dm = m.dim(), dn = n.dim();
  HomSpace h{dm, dn, {}};

  std::map<Degree, std::vector<std::size_t>> mdeg, ndeg;
  for (std::size_t i = 0; i < dm; ++i) mdeg[(*m.grading())[i]].push_back(i);
  for (std::size_t i = 0; i < dn; ++i) ndeg[(*n.grading())[i]].push_back(i);

  // Unknown block T_d has |N_d| x |M_d| entries, entry (p, q) at offset[d] + p*|M_d| + q.
  std::map<Degree, std::size_t> offset;
  std::size_t unknowns = 0;
  for (const auto& [d, idx] : mdeg) {
    auto it = ndeg.find(d);
    if (it == ndeg.end()) continue;
    offset[d] = unknowns;
    unknowns += idx.size() * it->second.size();
  }
  if (unknowns == 0) return h;

  EchelonBuilder eb(unknowns);
  const BitMatrix* zm[2] = {&m.x(), &m.y()};
  const BitMatrix* zn[2] = {&n.x(), &n.y()};
  const Degree shift[2] = {{1, 0}, {0, 1}};
  for (const auto& [d, midx] : mdeg) {
    for (int op = 0; op < 2; ++op) {
      const Degree target = d + shift[op];
      auto nt = ndeg.find(target);
      if (nt == ndeg.end()) continue;
      const auto src_block = offset.find(d);
      const auto dst_block = offset.find(target);
      const std::size_t m_d = midx.size();
      const std::size_t m_t = mdeg.count(target) ? mdeg.at(target).size() : 0;
      for (std::size_t q = 0; q < m_d; ++q) {
        const std::size_t bq = midx[q];
        for (std::size_t pt = 0; pt < nt->second.size(); ++pt) {
          const std::size_t bp = nt->second[pt];
          BitVector row(unknowns);
          // (z_N T_d)[p', q]
          if (src_block != offset.end()) {
            for (std::size_t p = 0; p < ndeg.at(d).size(); ++p) {
              if (zn[op]->get(bp, ndeg.at(d)[p])) row.flip(src_block->second + p * m_d + q);
            }
          }
          // (T_{d'} z_M)[p', q]
          if (dst_block != offset.end()) {
            for (std::size_t l = 0; l < m_t; ++l) {
              if (zm[op]->get(mdeg.at(target)[l], bq)) row.flip(dst_block->second + pt * m_t + l);
            }
          }
          if (!row.is_zero()) eb.add(std::move(row));
        }
      }
    }
  }
  const Subspace kernel = eb.kernel();
  for (std::size_t v = 0; v < kernel.dim(); ++v) {
    const BitVector sol = kernel.vector(v);
    BitMatrix t(dn, dm);
    for (const auto& [d, off] : offset) {
      const auto& mi = mdeg.at(d);
      const auto& ni = ndeg.at(d);
      for (std::size_t p = 0; p < ni.size(); ++p) {
        for (std::size_t q = 0; q < mi.size(); ++q) {
          if (sol.get(off + p * mi.size() + q)) t.set(ni[p], mi[q]);
        }
      }
    }
    h.basis.push_back(std::move(t));
  }
  return h;
}

BitMatrix combine(const HomSpace& h, const BitVector& coefficients) {
  BitMatrix t(h.target_dim, h.source_dim);
  for (std::size_t k = 0; k < h.basis.size(); ++k) {
    if (coefficients.get(k)) t += h.basis[k];
  }
  return t;
}

}  // namespace skewtensor
