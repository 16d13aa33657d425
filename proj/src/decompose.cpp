#include "skewtensor/decompose.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "skewtensor/iso.hpp"
#include "skewtensor/random.hpp"

namespace skewtensor {

namespace {

enum class EndKind { Invertible, Nilpotent, Neither };

EndKind classify(const BitMatrix& f) {
  if (is_invertible(f)) return EndKind::Invertible;
  if (is_nilpotent(f)) return EndKind::Nilpotent;
  return EndKind::Neither;
}

struct ScanResult {
  std::optional<BitMatrix> splitter;
  Certificate certificate;
};

// Looks for an endomorphism that is neither nilpotent nor invertible: basis
// elements first, then `random_tries` random combinations.
ScanResult scan(const HomSpace& end, bool exact, std::size_t random_tries, std::mt19937_64& rng) {
  ScanResult out;
  if (end.dim() == 1) {
    out.certificate = {CertificateLevel::DimEndOne, 0, "dim End = 1"};
    return out;
  }
  bool basis_ok = true;
  for (const auto& b : end.basis) {
    const EndKind k = classify(b);
    if (k == EndKind::Neither) {
      out.splitter = b;
      return out;
    }
    if (k == EndKind::Invertible && !is_nilpotent(b + BitMatrix::identity(b.rows()))) basis_ok = false;
  }
  if (basis_ok && exact && endomorphisms_local_exact(end)) {
    out.certificate = {CertificateLevel::LocalExact, 0,
                       "dim End = " + std::to_string(end.dim()) + "; non-identity parts generate a nilpotent algebra"};
    return out;
  }
  std::size_t tries = 0;
  while (tries < random_tries) {
    ++tries;
    const BitVector c = BitVector::random(end.dim(), rng);
    if (c.is_zero()) continue;
    BitMatrix f = combine(end, c);
    if (classify(f) == EndKind::Neither) {
      out.splitter = std::move(f);
      return out;
    }
  }
  out.certificate.tries = tries;
  if (basis_ok) {
    out.certificate.level = CertificateLevel::BasisLocalSplit;
    out.certificate.details = "dim End = " + std::to_string(end.dim()) + "; every basis element is nilpotent or 1 + nilpotent";
  } else {
    out.certificate.level = CertificateLevel::Heuristic;
    out.certificate.details = "no splitting endomorphism in " + std::to_string(tries) + " random samples";
  }
  return out;
}

struct Piece {
  GradedModule module;
  Certificate certificate;
  bool partial = false;
};

using EndFn = std::function<HomSpace(const GradedModule&)>;

void chop(const GradedModule& m, const EndFn& end_of, bool exact, std::size_t max_tries, std::uint64_t seed,
          std::vector<Piece>& out) {
  if (m.dim() == 0) return;
  HomSpace end;
  try {
    end = end_of(m);
  } catch (const ResourceLimit& e) {
    out.push_back({m, {CertificateLevel::Heuristic, 0, std::string("not split: ") + e.what()}, true});
    return;
  }
  std::mt19937_64 rng(seed);
  const std::size_t budget = max_tries != 0 ? max_tries : 64 * end.dim();
  ScanResult s = scan(end, exact, budget, rng);
  if (!s.splitter) {
    out.push_back({m, std::move(s.certificate), false});
    return;
  }
  const auto [ker, im] = fitting_pair(*s.splitter);
  chop(restrict(m, ker), end_of, exact, max_tries, split_seed(seed, 0), out);
  chop(restrict(m, im), end_of, exact, max_tries, split_seed(seed, 1), out);
}

bool rank_tables_equal(const GradedModule& a, const GradedModule& b) { return rank_table(a) == rank_table(b); }

struct ClassEntry {
  Summand summand;
  std::vector<std::size_t> ranks;
  std::map<Degree, std::size_t> hilbert;
  bool graded_pieces = false;
};

bool proven_local(const Certificate& c) {
  return c.level == CertificateLevel::LocalExact || c.level == CertificateLevel::DimEndOne;
}

Decomposition assemble(std::vector<Piece> pieces, bool graded_pieces, const GroupSchemeParams& params,
                       std::size_t free_count, const DecomposeOptions& options) {
  Decomposition d;
  d.seed = options.seed;
  std::vector<ClassEntry> classes;
  std::uint64_t compare_seed = split_seed(options.seed, 99);
  for (auto& p : pieces) {
    d.total_dim += p.module.dim();
    if (p.partial) d.partial = true;
    auto ranks = rank_table(p.module);
    auto hilbert = graded_pieces ? normalized_hilbert_function(p.module) : std::map<Degree, std::size_t>{};
    bool merged = false;
    if (options.group_classes && !p.partial) {
      for (auto& c : classes) {
        if (c.summand.module.dim() != p.module.dim() || c.ranks != ranks || c.hilbert != hilbert) continue;
        if (c.summand.certificate.level == CertificateLevel::Heuristic && !c.summand.certificate.details.empty() &&
            c.summand.certificate.details.rfind("not split", 0) == 0) {
          continue;
        }
        bool same = false;
        if (proven_local(c.summand.certificate) && proven_local(p.certificate)) {
          try {
            same = indecomposables_isomorphic(c.summand.module, p.module, compare_seed, options.max_unknowns).has_value();
          } catch (const ResourceLimit&) {
            d.warnings.push_back("isomorphism comparison skipped (resource limit) for summands of dim " +
                                 std::to_string(p.module.dim()));
          }
        } else {
          IsoOptions o;
          o.seed = compare_seed;
          o.compare_hilbert = graded_pieces;
          o.max_unknowns = options.max_unknowns;
          const IsoVerdict v = iso_test(c.summand.module, p.module, o);
          same = v.kind == IsoKind::Isomorphic;
          if (v.kind == IsoKind::Inconclusive) {
            d.warnings.push_back("isomorphism undecided between summands of dim " + std::to_string(p.module.dim()) +
                                 "; kept as separate classes");
          }
        }
        compare_seed = splitmix64(compare_seed);
        if (same) {
          ++c.summand.multiplicity;
          if (p.certificate.level < c.summand.certificate.level) c.summand.certificate = p.certificate;
          merged = true;
          break;
        }
      }
    }
    if (!merged) {
      ClassEntry e;
      e.summand = {std::move(p.module), 1, std::move(p.certificate), false};
      e.ranks = std::move(ranks);
      e.hilbert = std::move(hilbert);
      classes.push_back(std::move(e));
    }
    if (!classes.empty() && classes.back().summand.certificate.level == CertificateLevel::Heuristic && !merged) {
      d.warnings.push_back("summand of dim " + std::to_string(classes.back().summand.module.dim()) +
                           " carries only a heuristic certificate");
    }
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ClassEntry& a, const ClassEntry& b) {
    if (a.summand.module.dim() != b.summand.module.dim()) return a.summand.module.dim() > b.summand.module.dim();
    return a.ranks < b.ranks;
  });
  if (free_count > 0) {
    GradedModule f = free_module(params);
    Certificate c = indecomposability_certificate(f, options.exact, options.max_unknowns);
    d.summands.push_back({std::move(f), free_count, std::move(c), true});
    d.total_dim += free_count * params.free_dim();
  }
  for (auto& c : classes) d.summands.push_back(std::move(c.summand));
  std::stable_sort(d.summands.begin(), d.summands.end(),
                   [](const Summand& a, const Summand& b) { return a.module.dim() > b.module.dim(); });

  std::vector<std::size_t> odd;
  for (std::size_t k = 0; k < d.summands.size(); ++k) {
    if (d.summands[k].module.dim() % 2 == 1) odd.push_back(k);
  }
  if (odd.size() == 1) d.odd_summand = odd.front();
  return d;
}

HomSpace ungraded_end(const GradedModule& m, std::size_t max_unknowns) { return hom_space(m, m, max_unknowns); }

}  // namespace

std::string to_string(CertificateLevel level) {
  switch (level) {
    case CertificateLevel::Heuristic: return "heuristic";
    case CertificateLevel::BasisLocalSplit: return "basis_local_split";
    case CertificateLevel::LocalExact: return "local_exact";
    case CertificateLevel::DimEndOne: return "dim_end_one";
  }
  return "heuristic";
}

std::vector<std::size_t> Decomposition::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : summands) out.insert(out.end(), s.multiplicity, s.module.dim());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t free_rank(const GradedModule& m) {
  if (m.dim() == 0) return 0;
  return rank(m.monomial(m.params().x_order() - 1, m.params().y_order() - 1));
}

FreePeel peel_free(const GradedModule& m) {
  if (m.dim() == 0) return {0, m};
  const auto& p = m.params();
  const BitMatrix socle = m.monomial(p.x_order() - 1, p.y_order() - 1);
  const auto cols = rref(socle).pivots;  // s e_c independent for these c
  const std::size_t f = cols.size();
  if (f == 0) return {0, m};

  // Functionals phi_i with phi_i(s u_j) = delta_ij, supported on rows where s u_j is invertible.
  const BitMatrix w = select_columns(socle, cols);
  const auto rows = rref(w.transpose()).pivots;
  const auto w_inv = inverse(select_rows(w, rows));
  if (!w_inv) throw std::logic_error("peel_free: socle block is singular");
  BitMatrix phi(f, m.dim());
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t t = 0; t < f; ++t) {
      if (w_inv->get(i, t)) phi.set(i, rows[t]);
    }
  }

  // Complement: vectors killed by every phi_i x^a y^b; it is the largest submodule inside the phi kernels.
  EchelonBuilder eb(m.dim());
  BitMatrix xa = BitMatrix::identity(m.dim());
  for (std::size_t a = 0; a < p.x_order(); ++a) {
    BitMatrix xy = xa;
    for (std::size_t b = 0; b < p.y_order(); ++b) {
      const BitMatrix functionals = mul(phi, xy);
      for (std::size_t i = 0; i < f; ++i) eb.add_words(functionals.row_words(i));
      xy = mul(xy, m.y());
    }
    xa = mul(xa, m.x());
  }
  const Subspace complement = eb.kernel();
  if (complement.dim() + f * p.free_dim() != m.dim()) throw std::logic_error("peel_free: complement has the wrong dimension");
  return {f, restrict(m, complement)};
}

bool endomorphisms_local_exact(const HomSpace& end) {
  const std::size_t d = end.source_dim;
  if (d == 0 || end.dim() == 0) return false;
  const BitMatrix id = BitMatrix::identity(d);
  std::vector<BitMatrix> gens;
  for (const auto& b : end.basis) {
    BitMatrix n = is_invertible(b) ? b + id : b;
    if (!n.is_zero()) gens.push_back(std::move(n));
  }
  // N^k V for the algebra N generated by gens; N is nilpotent iff the chain reaches 0.
  Subspace w = Subspace::whole(d);
  for (std::size_t step = 0; step <= d; ++step) {
    if (w.dim() == 0) return true;
    const BitMatrix basis_cols = w.basis().transpose();
    EchelonBuilder eb(d);
    for (const auto& g : gens) {
      const BitMatrix images = mul(g, basis_cols).transpose();
      for (std::size_t r = 0; r < images.rows(); ++r) eb.add_words(images.row_words(r));
      if (eb.rank() == w.dim()) break;
    }
    if (eb.rank() == w.dim()) return false;  // the chain is stable at a nonzero space
    w = eb.to_subspace();
  }
  return w.dim() == 0;
}

std::optional<BitMatrix> indecomposables_isomorphic(const GradedModule& a, const GradedModule& b, std::uint64_t seed,
                                                    std::size_t max_unknowns) {
  if (a.dim() != b.dim() || !rank_tables_equal(a, b)) return std::nullopt;
  if (a.x() == b.x() && a.y() == b.y()) return BitMatrix::identity(a.dim());
  const HomSpace h = hom_space(a, b, max_unknowns);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& f : h.basis) {
    if (is_invertible(f)) return f;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 16; ++t) {
    const BitVector c = BitVector::random(h.dim(), rng);
    if (c.is_zero()) continue;
    BitMatrix f = combine(h, c);
    if (is_invertible(f)) return f;
  }
  // With End(a) local, a is isomorphic to b iff some g f is a unit, and then f itself is an isomorphism.
  const HomSpace back = hom_space(b, a, max_unknowns);
  for (const auto& f : h.basis) {
    for (const auto& g : back.basis) {
      if (is_invertible(mul(g, f))) {
        if (is_invertible(f)) return f;
      }
    }
  }
  return std::nullopt;
}

Certificate indecomposability_certificate(const GradedModule& m, bool exact, std::size_t max_unknowns) {
  if (m.dim() == 0) return {CertificateLevel::Heuristic, 0, "zero module"};
  HomSpace end;
  try {
    end = ungraded_end(m, max_unknowns);
  } catch (const ResourceLimit& e) {
    return {CertificateLevel::Heuristic, 0, e.what()};
  }
  std::mt19937_64 rng(1);
  ScanResult s = scan(end, exact, 0, rng);
  if (s.splitter) return {CertificateLevel::Heuristic, 0, "decomposable: an endomorphism is neither nilpotent nor invertible"};
  return s.certificate;
}

Decomposition fitting_chop(const GradedModule& m, std::uint64_t seed, std::size_t max_tries) {
  const auto start = std::chrono::steady_clock::now();
  DecomposeOptions o;
  o.seed = seed;
  o.max_tries = max_tries;
  std::vector<Piece> pieces;
  chop(m, [&](const GradedModule& x) { return ungraded_end(x, o.max_unknowns); }, o.exact, max_tries, seed, pieces);
  Decomposition d = assemble(std::move(pieces), false, m.params(), 0, o);
  d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return d;
}

Decomposition decompose(const GradedModule& m, const DecomposeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const FreePeel peeled = peel_free(m);
  std::vector<Piece> pieces;
  const bool graded = options.graded_first && peeled.complement.is_graded();
  const std::size_t max_unknowns = options.max_unknowns;
  if (graded) {
    std::vector<Piece> graded_pieces;
    chop(peeled.complement, [](const GradedModule& x) { return graded_hom_space(x, x); }, options.exact, options.max_tries,
         options.seed, graded_pieces);
    std::uint64_t k = 0;
    for (auto& gp : graded_pieces) {
      const std::uint64_t piece_seed = split_seed(options.seed, 1000 + k++);
      const bool graded_proof = proven_local(gp.certificate);
      HomSpace end;
      bool have_end = false;
      try {
        end = ungraded_end(gp.module, max_unknowns);
        have_end = true;
      } catch (const ResourceLimit&) {
      }
      if (!have_end) {
        Certificate c = gp.certificate;
        c.details = "graded endomorphisms only (ungraded system over budget): " + c.details;
        pieces.push_back({std::move(gp.module), std::move(c), false});
        continue;
      }
      std::mt19937_64 rng(piece_seed);
      ScanResult s = scan(end, options.exact, 0, rng);
      if (s.splitter) {
        // Not expected for graded-indecomposable pieces; fall back to the ungraded chop.
        chop(gp.module, [&](const GradedModule& x) { return ungraded_end(x, max_unknowns); }, options.exact,
             options.max_tries, piece_seed, pieces);
        continue;
      }
      Certificate c = s.certificate;
      if (graded_proof && c.level < CertificateLevel::LocalExact) {
        c.level = CertificateLevel::LocalExact;
        c.details = "graded endomorphism ring is local, so the piece is indecomposable; " + c.details;
      }
      pieces.push_back({std::move(gp.module), std::move(c), false});
    }
  } else {
    chop(peeled.complement, [&](const GradedModule& x) { return ungraded_end(x, max_unknowns); }, options.exact,
         options.max_tries, options.seed, pieces);
  }
  Decomposition d = assemble(std::move(pieces), graded, m.params(), peeled.rank, options);
  d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return d;
}

}  // namespace skewtensor
