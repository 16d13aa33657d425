#include "skewtensor/iso.hpp"

#include <random>
#include <sstream>

#include "skewtensor/random.hpp"

namespace skewtensor {

namespace {

template <typename Seq>
std::string join(const Seq& seq) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& v : seq) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << ']';
  return os.str();
}

std::string hilbert_text(const std::map<Degree, std::size_t>& h) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, n] : h) {
    if (!first) os << ',';
    os << '(' << d.i << ',' << d.j << "):" << n;
    first = false;
  }
  os << '}';
  return os.str();
}

IsoVerdict separated(std::string invariant, std::string values) {
  IsoVerdict v;
  v.kind = IsoKind::NotIsomorphic;
  v.invariant = std::move(invariant);
  v.values = std::move(values);
  return v;
}

}  // namespace

std::string to_string(IsoKind kind) {
  switch (kind) {
    case IsoKind::Isomorphic: return "isomorphic";
    case IsoKind::NotIsomorphic: return "not_isomorphic";
    case IsoKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool verify_witness(const GradedModule& m, const GradedModule& n, const BitMatrix& t) {
  return is_homomorphism(m, n, t) && is_invertible(t);
}

IsoVerdict iso_test(const GradedModule& m, const GradedModule& n, const IsoOptions& options) {
  if (!(m.params() == n.params())) throw std::invalid_argument("iso_test: modules are over different group schemes");
  if (m.dim() != n.dim()) return separated("dim", std::to_string(m.dim()) + " vs " + std::to_string(n.dim()));

  const auto rm = rank_table(m), rn = rank_table(n);
  if (rm != rn) {
    const std::size_t ny = m.params().y_order();
    for (std::size_t k = 0; k < rm.size(); ++k) {
      if (rm[k] != rn[k]) {
        return separated("rank(x^" + std::to_string(k / ny) + " y^" + std::to_string(k % ny) + ")",
                         std::to_string(rm[k]) + " vs " + std::to_string(rn[k]));
      }
    }
  }
  if (options.compare_hilbert && m.is_graded() && n.is_graded()) {
    const auto hm = normalized_hilbert_function(m), hn = normalized_hilbert_function(n);
    if (hm != hn) return separated("hilbert function up to translation", hilbert_text(hm) + " vs " + hilbert_text(hn));
  }

  IsoVerdict verdict;
  if (m.x() == n.x() && m.y() == n.y()) {
    verdict.kind = IsoKind::Isomorphic;
    verdict.witness = BitMatrix::identity(m.dim());
    return verdict;
  }

  HomSpace h;
  try {
    h = hom_space(m, n, options.max_unknowns);
  } catch (const ResourceLimit& e) {
    verdict.invariant = e.what();
    return verdict;
  }
  if (h.dim() == 0) return separated("dim Hom(M,N)", "0 vs nonzero dim End(M)");

  std::mt19937_64 rng(options.seed);
  std::size_t tries = 0;
  for (std::size_t k = 0; k < h.dim() && tries < options.max_tries; ++k, ++tries) {
    if (is_invertible(h.basis[k])) {
      verdict.kind = IsoKind::Isomorphic;
      verdict.witness = h.basis[k];
      verdict.tries = tries + 1;
      return verdict;
    }
  }
  while (tries < options.max_tries) {
    ++tries;
    BitVector c = BitVector::random(h.dim(), rng);
    if (c.is_zero()) continue;
    BitMatrix t = combine(h, c);
    if (is_invertible(t)) {
      verdict.kind = IsoKind::Isomorphic;
      verdict.witness = std::move(t);
      verdict.tries = tries;
      return verdict;
    }
  }

  try {
    const std::size_t end_m = hom_space(m, m, options.max_unknowns).dim();
    if (end_m != h.dim()) return separated("dim Hom(M,N) vs dim End(M)", std::to_string(h.dim()) + " vs " + std::to_string(end_m));
    const std::size_t hom_nm = hom_space(n, m, options.max_unknowns).dim();
    const std::size_t end_n = hom_space(n, n, options.max_unknowns).dim();
    if (hom_nm != end_n) return separated("dim Hom(N,M) vs dim End(N)", std::to_string(hom_nm) + " vs " + std::to_string(end_n));
  } catch (const ResourceLimit&) {
  }
  verdict.tries = tries;
  return verdict;
}

IsoVerdict iso_test(const GradedModule& m, const GradedModule& n, std::uint64_t seed, std::size_t max_tries) {
  IsoOptions o;
  o.seed = seed;
  o.max_tries = max_tries;
  return iso_test(m, n, o);
}

}  // namespace skewtensor
