#include "skewtensor/shapes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skewtensor {

namespace {

// Parts listed from the last one upward: (mu, lambda) per part.
void grow(std::size_t remaining, std::vector<std::pair<int, int>>& parts, std::vector<SkewPartition>& out) {
  if (remaining == 0) {
    std::vector<int> lambda, mu;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      mu.push_back(it->first);
      lambda.push_back(it->second);
    }
    out.emplace_back(std::move(lambda), std::move(mu));
    return;
  }
  const auto [below_mu, below_lambda] = parts.back();
  // The next part up overlaps the one below it: below_mu <= mu < below_lambda.
  for (int mu = below_mu; mu < below_lambda; ++mu) {
    const int lo = std::max(below_lambda, mu + 1);
    for (int lambda = lo; lambda - mu <= static_cast<int>(remaining); ++lambda) {
      parts.push_back({mu, lambda});
      grow(remaining - static_cast<std::size_t>(lambda - mu), parts, out);
      parts.pop_back();
    }
  }
}

}  // namespace

std::vector<SkewPartition> symmetry_orbit(const SkewPartition& shape) {
  const SkewPartition id = normalized(shape);
  const SkewPartition rot = rotate_180(id);
  const SkewPartition flip = flip_diagonal(id);
  return {id, rot, flip, rotate_180(flip)};
}

CanonicalShape canonicalize(const SkewPartition& shape) {
  if (!is_connected(shape)) throw std::invalid_argument("canonicalize: shape " + shape.to_string() + " is disconnected");
  const auto orbit = symmetry_orbit(shape);
  CanonicalShape c;
  c.input = shape;
  std::set<std::vector<Cell>> distinct;
  for (const auto& s : orbit) {
    auto cells = s.cells();
    distinct.insert(cells);
    if (c.cells.empty() || cells < c.cells) {
      c.cells = std::move(cells);
      c.shape = s;
    }
  }
  c.orbit_size = distinct.size();
  c.params = minimal_params(c.shape);
  return c;
}

std::vector<CanonicalShape> enumerate_shapes(std::size_t dim, int max_r, int max_s) {
  if (dim < 1) throw std::invalid_argument("enumerate_shapes: dim must be at least 1");
  std::vector<SkewPartition> raw;
  for (int len = 1; len <= static_cast<int>(dim); ++len) {
    std::vector<std::pair<int, int>> parts{{0, len}};
    grow(dim - static_cast<std::size_t>(len), parts, raw);
  }
  std::set<std::vector<Cell>> seen;
  std::vector<CanonicalShape> out;
  for (const auto& s : raw) {
    CanonicalShape c = canonicalize(s);
    if (!seen.insert(c.cells).second) continue;
    const bool fits_direct = c.params.r <= max_r && c.params.s <= max_s;
    const bool fits_flipped = c.params.s <= max_r && c.params.r <= max_s;
    if (!fits_direct && !fits_flipped) continue;
    c.input = c.shape;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CanonicalShape& a, const CanonicalShape& b) { return a.cells < b.cells; });
  return out;
}

std::string render_diagram(const SkewPartition& shape) {
  const int parts = static_cast<int>(shape.num_parts());
  const int height = shape.lambda().front();
  const int w = 3 * parts + 1, h = 2 * height + 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w), ' '));
  auto put = [&](int x, int y, char ch) {
    char& slot = canvas[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    if (ch == '+' || slot == ' ') slot = ch;
  };
  for (int i = 1; i <= parts; ++i) {
    const int mu = shape.mu_at(static_cast<std::size_t>(i - 1));
    const int lambda = shape.lambda()[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= lambda; ++j) {
      const int x = 3 * (i - 1), y = 2 * (height - j);
      if (j <= mu) {
        put(x + 1, y + 1, '#');
        put(x + 2, y + 1, '#');
        continue;
      }
      for (int dx = 1; dx <= 2; ++dx) {
        put(x + dx, y, '-');
        put(x + dx, y + 2, '-');
      }
      put(x, y + 1, '|');
      put(x + 3, y + 1, '|');
      for (int dy : {0, 2}) {
        put(x, y + dy, '+');
        put(x + 3, y + dy, '+');
      }
    }
  }
  std::string out;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

}  // namespace skewtensor
