#include "skewtensor/module.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace skewtensor {

namespace {

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

void require_same_params(const GradedModule& v, const GradedModule& w, const char* op) {
  if (!(v.params() == w.params())) {
    throw std::invalid_argument(std::string(op) + ": modules are over different group schemes");
  }
}

// (I + x)^-1 = I + x + x^2 + ... for nilpotent x.
BitMatrix unipotent_inverse(const BitMatrix& x) {
  BitMatrix sum = BitMatrix::identity(x.rows());
  BitMatrix term = x;
  while (!term.is_zero()) {
    sum += term;
    term = mul(term, x);
  }
  return sum;
}

std::optional<std::vector<Degree>> tensor_grading(const GradedModule& v, const GradedModule& w) {
  if (!v.is_graded() || !w.is_graded()) return std::nullopt;
  std::vector<Degree> g;
  g.reserve(v.dim() * w.dim());
  for (const auto& dv : *v.grading()) {
    for (const auto& dw : *w.grading()) g.push_back(dv + dw);
  }
  return g;
}

}  // namespace

GroupSchemeParams minimal_params(const SkewPartition& shape) {
  return {std::max(1, ceil_log2(shape.max_column_height())), std::max(1, ceil_log2(shape.max_part_length()))};
}

bool fits(const SkewPartition& shape, GroupSchemeParams params) {
  return static_cast<std::size_t>(shape.max_column_height()) <= params.x_order() &&
         static_cast<std::size_t>(shape.max_part_length()) <= params.y_order();
}

std::string to_string(TensorStructure s) { return s == TensorStructure::Alpha ? "alpha" : "group"; }

TensorStructure parse_structure(const std::string& text) {
  if (text == "alpha") return TensorStructure::Alpha;
  if (text == "group") return TensorStructure::Group;
  throw std::invalid_argument("unknown tensor structure '" + text + "' (expected alpha or group)");
}

GradedModule::GradedModule(GroupSchemeParams params, BitMatrix x, BitMatrix y, std::optional<std::vector<Degree>> grading)
    : params_(params), x_(std::move(x)), y_(std::move(y)), grading_(std::move(grading)) {
  if (params_.r < 1 || params_.s < 1) throw std::invalid_argument("group scheme parameters r and s must be at least 1");
  if (!x_.is_square() || !y_.is_square() || x_.rows() != y_.rows()) {
    throw std::invalid_argument("module matrices must be square and of equal size");
  }
  if (grading_ && grading_->size() != x_.rows()) throw std::invalid_argument("grading length does not match module dimension");
}

std::optional<std::string> GradedModule::axiom_violation() const {
  if (!is_nilpotent(x_, params_.x_order())) return "x^(2^r) != 0";
  if (!is_nilpotent(y_, params_.y_order())) return "y^(2^s) != 0";
  if (!(mul(x_, y_) == mul(y_, x_))) return "x and y do not commute";
  if (grading_) {
    const auto& g = *grading_;
    for (std::size_t a = 0; a < dim(); ++a) {
      for (std::size_t b = 0; b < dim(); ++b) {
        if (x_.get(a, b) && g[a] != g[b] + Degree{1, 0}) {
          return "x does not raise degree by (1,0) at entry (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
        if (y_.get(a, b) && g[a] != g[b] + Degree{0, 1}) {
          return "y does not raise degree by (0,1) at entry (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

void GradedModule::check_axioms() const {
  if (auto v = axiom_violation()) throw std::logic_error("module axiom violated: " + *v);
}

BitMatrix GradedModule::monomial(std::size_t a, std::size_t b) const { return mul(power(x_, a), power(y_, b)); }

GradedModule zero_module(GroupSchemeParams params) { return GradedModule(params, BitMatrix(0, 0), BitMatrix(0, 0), std::vector<Degree>{}); }

GradedModule trivial_module(GroupSchemeParams params) {
  return GradedModule(params, BitMatrix(1, 1), BitMatrix(1, 1), std::vector<Degree>{{0, 0}});
}

GradedModule free_module(GroupSchemeParams params, std::size_t rank) {
  const std::size_t nx = params.x_order(), ny = params.y_order(), f = params.free_dim();
  const std::size_t n = rank * f;
  BitMatrix x(n, n), y(n, n);
  std::vector<Degree> g(n);
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t b = 0; b < ny; ++b) {
        const std::size_t idx = k * f + a * ny + b;
        g[idx] = {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
        if (a + 1 < nx) x.set(idx + ny, idx);
        if (b + 1 < ny) y.set(idx + 1, idx);
      }
    }
  }
  return GradedModule(params, std::move(x), std::move(y), std::move(g));
}

GradedModule from_skew_partition(const SkewPartition& shape, GroupSchemeParams params) {
  for (std::size_t p = 0; p < shape.num_parts(); ++p) {
    const int len = shape.lambda()[p] - shape.mu_at(p);
    if (static_cast<std::size_t>(len) > params.y_order()) {
      throw std::invalid_argument("shape " + shape.to_string() + ": part " + std::to_string(p + 1) + " has " + std::to_string(len) +
                                  " cells, more than 2^s = " + std::to_string(params.y_order()));
    }
  }
  const auto cells = shape.cells();
  std::map<int, int> heights;
  for (const auto& c : cells) ++heights[c.j];
  for (const auto& [j, h] : heights) {
    if (static_cast<std::size_t>(h) > params.x_order()) {
      throw std::invalid_argument("shape " + shape.to_string() + ": column " + std::to_string(j) + " has " + std::to_string(h) +
                                  " cells, more than 2^r = " + std::to_string(params.x_order()));
    }
  }
  std::map<Cell, std::size_t> index;
  for (std::size_t k = 0; k < cells.size(); ++k) index[cells[k]] = k;
  const std::size_t n = cells.size();
  BitMatrix x(n, n), y(n, n);
  std::vector<Degree> g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Cell c = cells[k];
    g[k] = {c.i, c.j};
    if (auto it = index.find({c.i + 1, c.j}); it != index.end()) x.set(it->second, k);
    if (auto it = index.find({c.i, c.j + 1}); it != index.end()) y.set(it->second, k);
  }
  return GradedModule(params, std::move(x), std::move(y), std::move(g));
}

GradedModule tensor_alpha(const GradedModule& v, const GradedModule& w) {
  require_same_params(v, w, "tensor_alpha");
  const BitMatrix iv = BitMatrix::identity(v.dim()), iw = BitMatrix::identity(w.dim());
  return GradedModule(v.params(), kron(v.x(), iw) + kron(iv, w.x()), kron(v.y(), iw) + kron(iv, w.y()), tensor_grading(v, w));
}

GradedModule tensor_group(const GradedModule& v, const GradedModule& w) {
  require_same_params(v, w, "tensor_group");
  const BitMatrix iv = BitMatrix::identity(v.dim()), iw = BitMatrix::identity(w.dim());
  return GradedModule(v.params(), kron(v.x(), iw) + kron(iv, w.x()) + kron(v.x(), w.x()),
                      kron(v.y(), iw) + kron(iv, w.y()) + kron(v.y(), w.y()));
}

GradedModule tensor(const GradedModule& v, const GradedModule& w, TensorStructure structure) {
  return structure == TensorStructure::Alpha ? tensor_alpha(v, w) : tensor_group(v, w);
}

GradedModule dual_alpha(const GradedModule& v) {
  std::optional<std::vector<Degree>> g;
  if (v.is_graded()) {
    g.emplace();
    for (const auto& d : *v.grading()) g->push_back(-d);
  }
  return GradedModule(v.params(), v.x().transpose(), v.y().transpose(), std::move(g));
}

GradedModule dual_group(const GradedModule& v) {
  const BitMatrix x = mul(v.x(), unipotent_inverse(v.x())).transpose();
  const BitMatrix y = mul(v.y(), unipotent_inverse(v.y())).transpose();
  return GradedModule(v.params(), x, y);
}

GradedModule dual(const GradedModule& v, TensorStructure structure) {
  return structure == TensorStructure::Alpha ? dual_alpha(v) : dual_group(v);
}

GradedModule direct_sum(const GradedModule& v, const GradedModule& w) {
  require_same_params(v, w, "direct_sum");
  std::optional<std::vector<Degree>> g;
  if (v.is_graded() && w.is_graded()) {
    g = *v.grading();
    g->insert(g->end(), w.grading()->begin(), w.grading()->end());
  }
  return GradedModule(v.params(), direct_sum(v.x(), w.x()), direct_sum(v.y(), w.y()), std::move(g));
}

GradedModule direct_sum(std::span<const GradedModule> parts, GroupSchemeParams params) {
  GradedModule out = zero_module(params);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

Subspace spin(const GradedModule& m, std::span<const BitVector> seeds) {
  EchelonBuilder eb(m.dim());
  std::deque<BitVector> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    BitVector v = std::move(queue.front());
    queue.pop_front();
    if (v.size() != m.dim()) throw std::invalid_argument("spin: seed length does not match module dimension");
    if (!eb.add(v)) continue;
    queue.push_back(mul(m.x(), v));
    queue.push_back(mul(m.y(), v));
  }
  return eb.to_subspace();
}

bool is_invariant(const GradedModule& m, const Subspace& s) {
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const BitVector v = s.vector(k);
    if (!s.contains(mul(m.x(), v)) || !s.contains(mul(m.y(), v))) return false;
  }
  return true;
}

std::optional<Degree> homogeneous_degree(const GradedModule& m, const BitVector& v) {
  if (!m.is_graded()) return std::nullopt;
  std::optional<Degree> d;
  const auto& g = *m.grading();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v.get(i)) continue;
    if (!d) {
      d = g[i];
    } else if (*d != g[i]) {
      return std::nullopt;
    }
  }
  return d;
}

GradedModule restrict(const GradedModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw std::invalid_argument("restrict: subspace ambient dimension does not match module");
  const std::size_t k = s.dim();
  BitMatrix x(k, k), y(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    const BitVector v = s.vector(c);
    const BitVector xv = mul(m.x(), v), yv = mul(m.y(), v);
    if (!s.contains(xv) || !s.contains(yv)) throw std::invalid_argument("restrict: subspace is not invariant under x and y");
    const BitVector cx = s.coordinates(xv), cy = s.coordinates(yv);
    for (std::size_t r = 0; r < k; ++r) {
      if (cx.get(r)) x.set(r, c);
      if (cy.get(r)) y.set(r, c);
    }
  }
  std::optional<std::vector<Degree>> g;
  if (m.is_graded()) {
    std::vector<Degree> degrees;
    bool homogeneous = true;
    for (std::size_t c = 0; c < k && homogeneous; ++c) {
      auto d = homogeneous_degree(m, s.vector(c));
      if (d) {
        degrees.push_back(*d);
      } else {
        homogeneous = false;
      }
    }
    if (homogeneous) g = std::move(degrees);
  }
  return GradedModule(m.params(), std::move(x), std::move(y), std::move(g));
}

std::vector<std::size_t> rank_table(const GradedModule& m) {
  const std::size_t nx = m.params().x_order(), ny = m.params().y_order();
  std::vector<std::size_t> t(nx * ny);
  BitMatrix xa = BitMatrix::identity(m.dim());
  for (std::size_t a = 0; a < nx; ++a) {
    BitMatrix xy = xa;
    for (std::size_t b = 0; b < ny; ++b) {
      t[a * ny + b] = rank(xy);
      xy = mul(xy, m.y());
    }
    xa = mul(xa, m.x());
  }
  return t;
}

std::map<Degree, std::size_t> hilbert_function(const GradedModule& m) {
  std::map<Degree, std::size_t> h;
  if (!m.is_graded()) return h;
  for (const auto& d : *m.grading()) ++h[d];
  return h;
}

std::map<Degree, std::size_t> normalized_hilbert_function(const GradedModule& m) {
  const auto h = hilbert_function(m);
  if (h.empty()) return h;
  Degree lo = h.begin()->first;
  for (const auto& [d, n] : h) {
    lo.i = std::min(lo.i, d.i);
    lo.j = std::min(lo.j, d.j);
  }
  std::map<Degree, std::size_t> out;
  for (const auto& [d, n] : h) out[d - lo] = n;
  return out;
}

}  // namespace skewtensor
