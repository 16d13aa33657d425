#include "expected.hpp"

namespace skewtensor::cli {

namespace {

QuasiPolynomial linear(long long c0, long long c1) { return {1, {{c0, c1}}, 1}; }
// Period 2: odd n uses (odd0 + odd1 n), even n uses (even0 + even1 n).
QuasiPolynomial alternating(long long odd0, long long odd1, long long even0, long long even1) {
  return {2, {{even0, even1}, {odd0, odd1}}, 1};
}

}  // namespace

const std::vector<TableRow>& table_rows(int dim) {
  static const std::vector<TableRow> dim3 = {{{1, 4, 4}, {"3", "2,1"}}};
  static const std::vector<TableRow> dim5 = {
      {{1, 12, 12}, {"3,1,1", "4,2/1", "3,3,1/2"}},
      {{1, 4, 4, 8, 8}, {"4,1", "3,2", "5"}},
      {{1, 4, 4, 4, 4, 4, 4}, {"3,2,1/1"}},
  };
  static const std::vector<TableRow> dim7 = {
      {{1, 4, 4, 20, 20}, {"5,1,1", "6,2/1", "4,2,2/1", "5,2,2/1,1", "5,3,2/2,1", "5,5,1/4", "4,4,2,1/3,1"}},
      {{1, 8, 8, 16, 16}, {"6,1", "3,3,1", "4,3,1/1", "5,4,1/3", "5,4,2/3,1"}},
      {{1, 24, 24}, {"4,2,1,1/1", "5,3,1/2", "4,3,1,1/2", "4,4,1,1/3", "5,3,3/2,2"}},
      {{1, 48}, {"5,2", "4,2,1", "3,3,2/1", "4,3,3,1/2,2"}},
      {{1, 8, 8, 8, 8, 8, 8}, {"7", "5,3/1", "4,4,1/2", "4,3"}},
      {{1, 4, 4, 4, 4, 8, 8, 8, 8}, {"5,2,1/1", "6,3/2", "4,3,2/2"}},
      {{1, 4, 4, 4, 4, 16, 16}, {"4,1,1,1"}},
      {{1, 4, 4, 40}, {"4,3,2/1,1"}},
      {{1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4}, {"4,3,2,1/2,1"}},
  };
  static const std::vector<TableRow> none;
  switch (dim) {
    case 3: return dim3;
    case 5: return dim5;
    case 7: return dim7;
    default: return none;
  }
}

const std::vector<PowerCase>& corollary_cases() {
  static const std::vector<PowerCase> cases = {
      {"(4,1) over alpha(1,2)", "4,1", 1, 2, 12, linear(1, 4), "4n+1"},
      {"(3,1,1) over alpha(2,2)", "3,1,1", 2, 2, 8, alternating(-5, 10, 1, 6), "[10n-5, 6n+1]"},
      {"(4,2)/(1) over alpha(1,2)", "4,2/1", 1, 2, 10, alternating(-1, 6, 1, 6), "[6n-1, 6n+1]"},
      {"(6,1) over alpha(1,3)", "6,1", 1, 3, 6, {1, {{1, 4, 2}}, 1}, "2n^2+4n+1"},
      {"2-staircase over alpha(1,1)", "2,1", 1, 1, 10, linear(1, 2), "2n+1"},
      {"3-staircase over alpha(1,1)", "3,2,1/1", 1, 1, 10, linear(1, 4), "4n+1"},
      {"4-staircase over alpha(1,1)", "4,3,2,1/2,1", 1, 1, 10, linear(1, 6), "6n+1"},
  };
  return cases;
}

const std::vector<PowerCase>& table12_cases() {
  static const std::vector<PowerCase> cases = {
      {"(3,2)", "3,2", 1, 2, 8, alternating(-5, 10, 1, 6), "[10x-5, 6x+1]", 'x'},
      {"(4,3)", "4,3", 1, 2, 8, alternating(3, 4, 1, 4), "[4x+3, 4x+1]", 'x'},
      {"(4,1,1,1)", "4,1,1,1", 2, 2, 8, alternating(-1, 8, 1, 8), "[8x-1, 8x+1]", 'x'},
      {"(5,2,1)/(1)", "5,2,1/1", 1, 2, 8, linear(1, 6), "6x+1", 'x'},
      {"(5,4,1)/(1)", "5,4,1/1", 1, 2, 8, linear(1, 8), "8x+1", 'x'},
  };
  return cases;
}

}  // namespace skewtensor::cli
