#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewtensor {

// f_{n mod period}(n); polys[r] holds the coefficients c0, c1, ... of f_r.
struct QuasiPolynomial {
  long long period = 1;
  std::vector<std::vector<long long>> polys;
  long long offset = 1;

  int degree() const;
  bool operator==(const QuasiPolynomial&) const = default;
};

struct FitOptions {
  long long m_max = 4;
  int d_max = 3;
};

// Minimal period, then minimal degree, interpolating every point, with at
// least degree + 2 points in each residue class. Indices must be consecutive.
std::optional<QuasiPolynomial> fit(const std::vector<std::pair<long long, long long>>& seq, FitOptions options = {});
std::optional<QuasiPolynomial> fit_values(const std::vector<long long>& values, long long first_index = 1,
                                          FitOptions options = {});

long long eval(const QuasiPolynomial& qp, long long n);

// "4n+1"; several classes print as [f_1, ..., f_{m-1}, f_0], so period 2 reads [odd, even].
std::string format_polynomial(const std::vector<long long>& coeffs, char var = 'n');
std::string pretty(const QuasiPolynomial& qp, char var = 'n');

}  // namespace skewtensor
