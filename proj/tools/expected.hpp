#pragma once

#include <string>
#include <vector>

#include "skewtensor/qpfit.hpp"

namespace skewtensor::cli {

// One row of a V (x) V* table: the summand dimensions and the diagrams drawn in that row.
struct TableRow {
  std::vector<std::size_t> dims;
  std::vector<std::string> shapes;
};

// Rows for dim 3, 5 or 7; empty for any other dimension.
const std::vector<TableRow>& table_rows(int dim);

// A tensor-power run whose odd summand dimensions follow a known quasi-polynomial.
struct PowerCase {
  std::string name;
  std::string shape;
  int r = 1;
  int s = 1;
  int n_max = 1;
  QuasiPolynomial expected;
  std::string expected_text;  // pretty() of `expected` in the case's variable
  char var = 'n';
};

const std::vector<PowerCase>& corollary_cases();
const std::vector<PowerCase>& table12_cases();

}  // namespace skewtensor::cli
