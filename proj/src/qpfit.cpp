#include "skewtensor/qpfit.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace skewtensor {

namespace {

using boost::multiprecision::cpp_rational;

long long residue(long long n, long long m) { return ((n % m) + m) % m; }

// Coefficients of the degree <= d polynomial through the first d+1 points.
std::vector<cpp_rational> interpolate(const std::vector<std::pair<long long, long long>>& pts, int d) {
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  std::vector<std::vector<cpp_rational>> a(k, std::vector<cpp_rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    cpp_rational p = 1;
    for (std::size_t j = 0; j < k; ++j) {
      a[i][j] = p;
      p *= pts[i].first;
    }
    a[i][k] = pts[i].second;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;  // distinct nodes keep the Vandermonde matrix invertible
    std::swap(a[piv], a[c]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const cpp_rational factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= factor * a[c][j];
    }
  }
  std::vector<cpp_rational> coeffs(k);
  for (std::size_t i = 0; i < k; ++i) coeffs[i] = a[i][k] / a[i][i];
  return coeffs;
}

cpp_rational evaluate(const std::vector<cpp_rational>& c, long long n) {
  cpp_rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * n + c[i];
  return acc;
}

}  // namespace

int QuasiPolynomial::degree() const {
  int d = 0;
  for (const auto& p : polys) {
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] != 0) {
        d = std::max(d, static_cast<int>(i));
        break;
      }
    }
  }
  return d;
}

std::optional<QuasiPolynomial> fit(const std::vector<std::pair<long long, long long>>& seq, FitOptions options) {
  if (seq.empty()) return std::nullopt;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i].first != seq[i - 1].first + 1) throw std::invalid_argument("fit: indices must be consecutive");
  }
  for (long long m = 1; m <= options.m_max; ++m) {
    std::vector<std::vector<std::pair<long long, long long>>> classes(static_cast<std::size_t>(m));
    for (const auto& pt : seq) classes[static_cast<std::size_t>(residue(pt.first, m))].push_back(pt);
    for (int d = 0; d <= options.d_max; ++d) {
      bool ok = true;
      std::vector<std::vector<cpp_rational>> found(static_cast<std::size_t>(m));
      for (std::size_t r = 0; r < classes.size() && ok; ++r) {
        const auto& pts = classes[r];
        if (pts.size() < static_cast<std::size_t>(d) + 2) {
          ok = false;
          break;
        }
        found[r] = interpolate(pts, d);
        for (const auto& pt : pts) {
          if (evaluate(found[r], pt.first) != pt.second) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      QuasiPolynomial qp;
      qp.period = m;
      qp.offset = seq.front().first;
      for (const auto& c : found) {
        std::vector<long long> ints;
        for (const auto& q : c) {
          if (denominator(q) != 1) throw std::domain_error("fit: interpolating polynomial has non-integral coefficients");
          ints.push_back(static_cast<long long>(numerator(q)));
        }
        while (ints.size() > 1 && ints.back() == 0) ints.pop_back();
        qp.polys.push_back(std::move(ints));
      }
      return qp;
    }
  }
  return std::nullopt;
}

std::optional<QuasiPolynomial> fit_values(const std::vector<long long>& values, long long first_index, FitOptions options) {
  std::vector<std::pair<long long, long long>> seq;
  for (std::size_t i = 0; i < values.size(); ++i) seq.push_back({first_index + static_cast<long long>(i), values[i]});
  return fit(seq, options);
}

long long eval(const QuasiPolynomial& qp, long long n) {
  const auto& c = qp.polys.at(static_cast<std::size_t>(residue(n, qp.period)));
  long long acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * n + c[i];
  return acc;
}

std::string format_polynomial(const std::vector<long long>& coeffs, char var) {
  std::string s;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const long long c = coeffs[i];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? '-' : '+';
    }
    if (i == 0 || mag != 1) s += std::to_string(mag);
    if (i >= 1) s += var;
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string pretty(const QuasiPolynomial& qp, char var) {
  if (qp.period == 1) return format_polynomial(qp.polys.at(0), var);
  std::string s = "[";
  for (long long k = 1; k <= qp.period; ++k) {
    if (k > 1) s += ", ";
    s += format_polynomial(qp.polys.at(static_cast<std::size_t>(k % qp.period)), var);
  }
  return s + "]";
}

}  // namespace skewtensor
