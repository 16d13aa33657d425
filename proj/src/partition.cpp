#include "skewtensor/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <set>

namespace skewtensor {

namespace {

void validate(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (lambda.empty()) throw std::invalid_argument("skew partition: lambda must have at least one part");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw std::invalid_argument("skew partition: lambda part " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && lambda[i] > lambda[i - 1]) {
      throw std::invalid_argument("skew partition: lambda is not weakly decreasing at part " + std::to_string(i + 1));
    }
  }
  if (mu.size() >= lambda.size()) {
    throw std::invalid_argument("skew partition: mu must have fewer parts than lambda");
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) throw std::invalid_argument("skew partition: mu part " + std::to_string(i + 1) + " is negative");
    if (i > 0 && mu[i] > mu[i - 1]) {
      throw std::invalid_argument("skew partition: mu is not weakly decreasing at part " + std::to_string(i + 1));
    }
    if (mu[i] > lambda[i]) {
      throw std::invalid_argument("skew partition: mu part " + std::to_string(i + 1) + " exceeds lambda part");
    }
  }
  int cells = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) cells += lambda[i] - (i < mu.size() ? mu[i] : 0);
  if (cells < 1) throw std::invalid_argument("skew partition: diagram has no cells");
}

std::vector<int> parse_parts(std::string_view text, std::size_t base, bool allow_zero) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    if (token.empty()) throw ParseError("expected a part", base + pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      const auto bad = static_cast<std::size_t>(ptr - token.data());
      throw ParseError("invalid integer '" + std::string(token) + "'", base + pos + bad);
    }
    if (value < 0 || (value == 0 && !allow_zero)) throw ParseError("part must be positive", base + pos);
    parts.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return parts;
}

std::string join(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace

SkewPartition::SkewPartition(std::vector<int> lambda, std::vector<int> mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  while (!mu_.empty() && mu_.back() == 0) mu_.pop_back();
  validate(lambda_, mu_);
}

SkewPartition SkewPartition::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty shape", 0);
  const std::size_t slash = text.find('/');
  auto lambda = parse_parts(text.substr(0, slash), 0, false);
  std::vector<int> mu;
  if (slash != std::string_view::npos) mu = parse_parts(text.substr(slash + 1), slash + 1, true);
  try {
    return SkewPartition(std::move(lambda), std::move(mu));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), slash == std::string_view::npos ? 0 : slash);
  }
}

SkewPartition SkewPartition::from_cells(std::span<const Cell> cells) {
  if (cells.empty()) throw std::invalid_argument("from_cells: empty cell set");
  int min_i = cells[0].i, max_i = cells[0].i, min_j = cells[0].j;
  for (const auto& c : cells) {
    min_i = std::min(min_i, c.i);
    max_i = std::max(max_i, c.i);
    min_j = std::min(min_j, c.j);
  }
  const auto parts = static_cast<std::size_t>(max_i - min_i + 1);
  std::vector<int> lo(parts, 0), hi(parts, -1), count(parts, 0);
  for (const auto& c : cells) {
    const auto p = static_cast<std::size_t>(c.i - min_i);
    const int j = c.j - min_j + 1;
    if (count[p] == 0) {
      lo[p] = hi[p] = j;
    } else {
      lo[p] = std::min(lo[p], j);
      hi[p] = std::max(hi[p], j);
    }
    ++count[p];
  }
  std::vector<int> lambda(parts), mu(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    if (count[p] == 0) continue;
    if (hi[p] - lo[p] + 1 != count[p]) throw std::invalid_argument("from_cells: part " + std::to_string(p + 1) + " is not an interval");
    lambda[p] = hi[p];
    mu[p] = lo[p] - 1;
  }
  // Empty interior parts sit between their neighbours.
  for (std::size_t p = 0; p < parts; ++p) {
    if (count[p] != 0) continue;
    int next_lambda = 0;
    for (std::size_t q = p + 1; q < parts; ++q) {
      if (count[q] != 0) {
        next_lambda = lambda[q];
        break;
      }
    }
    lambda[p] = mu[p] = next_lambda;
    count[p] = -1;
  }
  return SkewPartition(std::move(lambda), std::move(mu));
}

std::vector<Cell> SkewPartition::cells() const {
  std::vector<Cell> out;
  for (std::size_t p = 0; p < lambda_.size(); ++p) {
    for (int j = mu_at(p) + 1; j <= lambda_[p]; ++j) out.push_back({static_cast<int>(p) + 1, j});
  }
  return out;
}

std::size_t SkewPartition::size() const {
  std::size_t n = 0;
  for (std::size_t p = 0; p < lambda_.size(); ++p) n += static_cast<std::size_t>(lambda_[p] - mu_at(p));
  return n;
}

int SkewPartition::max_part_length() const {
  int m = 0;
  for (std::size_t p = 0; p < lambda_.size(); ++p) m = std::max(m, lambda_[p] - mu_at(p));
  return m;
}

int SkewPartition::max_column_height() const {
  std::map<int, int> heights;
  for (const auto& c : cells()) ++heights[c.j];
  int m = 0;
  for (const auto& [j, h] : heights) m = std::max(m, h);
  return m;
}

std::string SkewPartition::to_string() const {
  std::string s = join(lambda_);
  if (!mu_.empty()) s += "/" + join(mu_);
  return s;
}

bool is_connected(std::span<const Cell> cells) {
  if (cells.empty()) return false;
  std::set<Cell> remaining(cells.begin(), cells.end());
  std::queue<Cell> frontier;
  frontier.push(*remaining.begin());
  remaining.erase(remaining.begin());
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop();
    for (const Cell n : {Cell{c.i + 1, c.j}, Cell{c.i - 1, c.j}, Cell{c.i, c.j + 1}, Cell{c.i, c.j - 1}}) {
      if (auto it = remaining.find(n); it != remaining.end()) {
        remaining.erase(it);
        frontier.push(n);
      }
    }
  }
  return remaining.empty();
}

bool is_connected(const SkewPartition& shape) {
  const auto c = shape.cells();
  return is_connected(c);
}

SkewPartition flip_diagonal(const SkewPartition& shape) {
  auto cells = shape.cells();
  for (auto& c : cells) std::swap(c.i, c.j);
  return SkewPartition::from_cells(cells);
}

SkewPartition rotate_180(const SkewPartition& shape) {
  auto cells = shape.cells();
  for (auto& c : cells) {
    c.i = -c.i;
    c.j = -c.j;
  }
  return SkewPartition::from_cells(cells);
}

SkewPartition normalized(const SkewPartition& shape) {
  const auto c = shape.cells();
  return SkewPartition::from_cells(c);
}

SkewPartition staircase(int m) {
  if (m < 1) throw std::invalid_argument("staircase: m must be at least 1");
  if (m == 1) return SkewPartition({1});
  std::vector<int> lambda, mu;
  for (int k = m; k >= 1; --k) lambda.push_back(k);
  for (int k = m - 2; k >= 1; --k) mu.push_back(k);
  return SkewPartition(std::move(lambda), std::move(mu));
}

}  // namespace skewtensor
