#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skewtensor/module.hpp"
#include "skewtensor/shapes.hpp"

using namespace skewtensor;

namespace {

oracle::CellSet to_oracle(const std::vector<Cell>& cells) {
  oracle::CellSet c;
  for (const auto& cell : cells) c.push_back({cell.i, cell.j});
  return c;
}

}  // namespace

TEST_CASE("counts for small dimensions") {
  CHECK(enumerate_shapes(1).size() == 1);
  CHECK(enumerate_shapes(3).size() == 2);
  CHECK(enumerate_shapes(5).size() == 7);
  CHECK(enumerate_shapes(7).size() == 31);
}

TEST_CASE("enumeration agrees with brute-force polyomino growth up to dim 6") {
  for (std::size_t d = 1; d <= 6; ++d) {
    CAPTURE(d);
    const auto brute = oracle::brute_force_shapes(d);
    std::set<oracle::CellSet> ours;
    for (const auto& c : enumerate_shapes(d)) ours.insert(to_oracle(c.cells));
    CHECK(ours == brute);
  }
}

TEST_CASE("enumerated shapes satisfy the listed invariants") {
  for (std::size_t d = 1; d <= 7; ++d) {
    const auto shapes = enumerate_shapes(d);
    std::set<std::vector<Cell>> seen;
    for (const auto& c : shapes) {
      CHECK(c.dim() == d);
      CHECK(c.shape.size() == d);
      CHECK(c.shape.cells() == c.cells);
      CHECK(is_connected(c.shape));
      CHECK(fits(c.shape, c.params));
      CHECK(c.params == minimal_params(c.shape));
      CHECK(seen.insert(c.cells).second);
      // the representative is the least cell list of its orbit
      CHECK(to_oracle(c.cells) == oracle::orbit_min(to_oracle(c.cells)));
    }
    CHECK(std::is_sorted(shapes.begin(), shapes.end(),
                         [](const CanonicalShape& a, const CanonicalShape& b) { return a.cells < b.cells; }));
  }
}

TEST_CASE("canonicalize is idempotent and symmetric") {
  CHECK(canonicalize(SkewPartition::parse("1,1,1")).cells == canonicalize(SkewPartition::parse("3")).cells);
  const auto hook = SkewPartition::parse("4,1");
  CHECK(canonicalize(hook).cells == canonicalize(rotate_180(hook)).cells);
  for (const auto& c : enumerate_shapes(6)) {
    const auto again = canonicalize(c.shape);
    CHECK(again.cells == c.cells);
    for (const auto& member : symmetry_orbit(c.shape)) CHECK(canonicalize(member).cells == c.cells);
  }
  CHECK(canonicalize(SkewPartition::parse("4,2/1")).cells != canonicalize(SkewPartition::parse("3,2,1/1")).cells);
  CHECK_THROWS_AS(canonicalize(SkewPartition::parse("5,4,2,2,1,1/3,2")), std::invalid_argument);
}

TEST_CASE("orbit expansion matches the oracle") {
  for (const auto& c : enumerate_shapes(6)) {
    std::set<oracle::CellSet> ours, theirs;
    for (const auto& m : symmetry_orbit(c.shape)) ours.insert(to_oracle(m.cells()));
    for (const auto& m : oracle::orbit(to_oracle(c.cells))) theirs.insert(m);
    CHECK(ours == theirs);
    CHECK(c.orbit_size == theirs.size());
  }
}

TEST_CASE("box limits restrict enumeration") {
  // only shapes fitting alpha(1,1) (or its transpose) are kept
  for (const auto& c : enumerate_shapes(3, 1, 1)) {
    CHECK((fits(c.shape, {1, 1}) || fits(flip_diagonal(c.shape), {1, 1})));
  }
  CHECK(enumerate_shapes(3, 1, 1).size() == 1);
  CHECK(enumerate_shapes(5, 30, 30).size() == 7);
}

TEST_CASE("diagram rendering") {
  const auto one = render_diagram(SkewPartition::parse("1"));
  CHECK(one == "+--+\n|  |\n+--+\n");
  const auto hook = render_diagram(SkewPartition::parse("4,1"));
  std::size_t boxes = 0;
  for (std::size_t p = hook.find('|'); p != std::string::npos; p = hook.find('|', p + 1)) ++boxes;
  CHECK(boxes == 3 * 2 + 3);  // three lone boxes, then a bottom row of two sharing a wall
  const auto fig = render_diagram(SkewPartition::parse("5,4,2,2,1,1/3,2"));
  CHECK(fig.find("##") != std::string::npos);
  CHECK(std::count(fig.begin(), fig.end(), '\n') == 11);
}
