#pragma once

// Slow, obviously-correct reference implementations used only by the tests.
// None of them call into the library's linear algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "skewtensor/bitmatrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;  // entries 0/1

inline Dense to_dense(const skewtensor::BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
  return d;
}

inline skewtensor::BitMatrix from_dense(const Dense& d, std::size_t cols) {
  skewtensor::BitMatrix m(d.size(), cols);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, d[i][j] != 0);
  return m;
}

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
  Dense c(a.size(), std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < inner; ++k) s ^= a[i][k] & b[k][j];
      c[i][j] = s;
    }
  return c;
}

inline Dense kron(const Dense& a, const Dense& b, std::size_t a_cols, std::size_t b_cols) {
  Dense c(a.size() * b.size(), std::vector<int>(a_cols * b_cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a_cols; ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b_cols; ++l) c[i * b.size() + k][j * b_cols + l] = a[i][j] & b[k][l];
  return c;
}

// Plain Gaussian elimination, one entry at a time.
inline std::size_t rank(Dense m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c])
        for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
    ++r;
  }
  return r;
}

// Solvability of A x = b via rank of the augmented matrix.
inline bool consistent(const Dense& a, const std::vector<int>& b, std::size_t cols) {
  Dense aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  return rank(a, cols) == rank(aug, cols + 1);
}

using CellSet = std::vector<std::pair<int, int>>;  // sorted (i, j)

inline CellSet normalize(CellSet c) {
  int mi = 1 << 30, mj = 1 << 30;
  for (auto [i, j] : c) {
    mi = std::min(mi, i);
    mj = std::min(mj, j);
  }
  for (auto& [i, j] : c) {
    i = i - mi + 1;
    j = j - mj + 1;
  }
  std::sort(c.begin(), c.end());
  return c;
}

inline CellSet rotate(const CellSet& c) {
  CellSet out;
  for (auto [i, j] : c) out.push_back({-i, -j});
  return normalize(out);
}

inline CellSet transpose(const CellSet& c) {
  CellSet out;
  for (auto [i, j] : c) out.push_back({j, i});
  return normalize(out);
}

inline std::vector<CellSet> orbit(const CellSet& c) {
  const CellSet n = normalize(c);
  return {n, rotate(n), transpose(n), rotate(transpose(n))};
}

inline CellSet orbit_min(const CellSet& c) {
  auto o = orbit(c);
  return *std::min_element(o.begin(), o.end());
}

// Skew shape: each part (fixed i) is an interval of j, and both ends of the
// intervals weakly decrease as i grows, with no missing parts in between.
inline bool is_skew(const CellSet& c) {
  std::map<int, std::pair<int, int>> range;
  std::map<int, int> count;
  for (auto [i, j] : c) {
    auto it = range.find(i);
    if (it == range.end()) {
      range[i] = {j, j};
    } else {
      it->second.first = std::min(it->second.first, j);
      it->second.second = std::max(it->second.second, j);
    }
    ++count[i];
  }
  int prev_i = 0;
  std::pair<int, int> prev{0, 0};
  bool first = true;
  for (auto [i, r] : range) {
    if (r.second - r.first + 1 != count[i]) return false;
    if (!first) {
      if (i != prev_i + 1) return false;
      if (r.first > prev.first || r.second > prev.second) return false;
    }
    first = false;
    prev_i = i;
    prev = r;
  }
  return true;
}

// All orbit representatives of connected skew shapes with `size` cells, by
// growing polyominoes one neighbouring cell at a time.
inline std::set<CellSet> brute_force_shapes(std::size_t size) {
  std::set<CellSet> level = {{{1, 1}}};
  for (std::size_t n = 1; n < size; ++n) {
    std::set<CellSet> next;
    for (const auto& c : level) {
      std::set<std::pair<int, int>> have(c.begin(), c.end());
      for (auto [i, j] : c) {
        for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          std::pair<int, int> cell{i + di, j + dj};
          if (have.count(cell)) continue;
          CellSet grown = c;
          grown.push_back(cell);
          next.insert(normalize(grown));
        }
      }
    }
    level = std::move(next);
  }
  std::set<CellSet> out;
  for (const auto& c : level)
    if (is_skew(c)) out.insert(orbit_min(c));
  return out;
}

// Module action by walking the diagram: x sends (i,j) to (i+1,j), y to (i,j+1).
inline std::pair<Dense, Dense> diagram_walk(const CellSet& cells) {
  const std::size_t n = cells.size();
  Dense x(n, std::vector<int>(n, 0)), y(n, std::vector<int>(n, 0));
  for (std::size_t src = 0; src < n; ++src) {
    for (std::size_t dst = 0; dst < n; ++dst) {
      if (cells[dst].first == cells[src].first + 1 && cells[dst].second == cells[src].second) x[dst][src] = 1;
      if (cells[dst].first == cells[src].first && cells[dst].second == cells[src].second + 1) y[dst][src] = 1;
    }
  }
  return {x, y};
}

}  // namespace oracle
