// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "expected.hpp"
#include "oracles.hpp"
#include "skewtensor/decompose.hpp"
#include "skewtensor/homology.hpp"
#include "skewtensor/iso.hpp"
#include "skewtensor/powerlab.hpp"
#include "skewtensor/qpfit.hpp"
#include "skewtensor/shapes.hpp"
#include "support.hpp"

using namespace skewtensor;

namespace {

// Time budgets in seconds.
constexpr double kTable1Budget = 5;
constexpr double kTable2Budget = 30;
constexpr double kTable3Budget = 600;
constexpr double kLinearHookBudget = 120;
constexpr double kThreeOneOneBudget = 600;
constexpr double kFourTwoOneBudget = 600;
constexpr double kSixOneBudget = 900;
constexpr double kStaircaseBudget = 120;
constexpr std::size_t kRandomConstructions = 500;
constexpr std::size_t kFuzzCases = 1000;
constexpr std::size_t kOmegaPairs = 20;

int failures = 0;
std::vector<PowerRun> corollary_runs;  // criteria 4-8, re-examined by 12d

struct Outcome {
  bool pass = false;
  std::string detail;
};

void criterion(const std::string& id, const std::string& title, double budget, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0 && secs > budget) {
    o.pass = false;
    o.detail += " (over budget " + std::to_string(static_cast<int>(budget)) + " s)";
  }
  if (!o.pass) ++failures;
  std::printf("%s %-4s %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome table(const std::string& which) {
  const auto report = cli::verify_tables(which);
  std::size_t ok = 0;
  std::string bad;
  for (const auto& c : report.checks) {
    if (c.pass) {
      ++ok;
    } else {
      bad += " " + c.name + " expected " + c.expected + " got " + c.actual + ";";
    }
  }
  return {report.pass(), std::to_string(ok) + "/" + std::to_string(report.checks.size()) + " checks" + bad};
}

std::string join(const std::vector<long long>& v) {
  std::ostringstream o;
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  return o.str();
}

Outcome power_case(const cli::PowerCase& pc, bool graded_first = true) {
  PowerOptions po;
  po.decompose.graded_first = graded_first;
  const auto run = pv_sequence(SkewPartition::parse(pc.shape), {pc.r, pc.s}, TensorStructure::Alpha, pc.n_max, 1, po);
  corollary_runs.push_back(run);
  std::vector<long long> want;
  for (int n = 1; n <= pc.n_max; ++n) want.push_back(eval(pc.expected, n));
  const auto qp = fit_values(run.values());
  const bool pass = run.values() == want && qp && *qp == pc.expected && !run.partial;
  return {pass, pc.shape + " -> " + join(run.values()) + " fit " + (qp ? pretty(*qp, pc.var) : std::string("none"))};
}

const cli::PowerCase& corollary(const std::string& shape) {
  for (const auto& pc : cli::corollary_cases())
    if (pc.shape == shape) return pc;
  throw std::logic_error("no corollary case for " + shape);
}

Outcome iso_with_witness(const GradedModule& a, const GradedModule& b, const std::string& what) {
  const auto v = iso_test(a, b, 1);
  const bool ok = v.kind == IsoKind::Isomorphic && v.witness && verify_witness(a, b, *v.witness);
  return {ok, what + ": " + to_string(v.kind) + (ok ? " (witness verified)" : "")};
}

std::vector<CanonicalShape> shapes_up_to(std::size_t dim) {
  std::vector<CanonicalShape> out;
  for (std::size_t d = 1; d <= dim; ++d)
    for (auto& c : enumerate_shapes(d)) out.push_back(std::move(c));
  return out;
}

GradedModule v_dual(const GradedModule& v) { return tensor_alpha(v, dual_alpha(v)); }

}  // namespace

int main() {
  criterion("1", "Table 1 (dim 3, V x V*)", kTable1Budget, [] { return table("dim3"); });
  criterion("2", "Table 2 (dim 5, V x V*)", kTable2Budget, [] { return table("dim5"); });
  criterion("3", "Table 3 (dim 7, V x V*)", kTable3Budget, [] { return table("dim7"); });

  criterion("4", "P_V(n) = 4n+1 for (4,1), n <= 12", kLinearHookBudget, [] { return power_case(corollary("4,1")); });
  criterion("5", "P_V(n) = [10n-5, 6n+1] for (3,1,1), n <= 8", kThreeOneOneBudget,
            [] { return power_case(corollary("3,1,1")); });
  criterion("6", "P_V(n) = [6n-1, 6n+1] for (4,2)/(1), n <= 10", kFourTwoOneBudget,
            [] { return power_case(corollary("4,2/1")); });
  criterion("7", "P_V(n) = 2n^2+4n+1 for (6,1), n <= 6, graded first", kSixOneBudget,
            [] { return power_case(corollary("6,1"), true); });
  criterion("8", "staircases: (2m-2)n+1 and Omega^-(m-1)(k)", kStaircaseBudget, [] {
    Outcome o{true, ""};
    const GroupSchemeParams p{1, 1};
    for (int m = 2; m <= 4; ++m) {
      const auto& pc = corollary(staircase(m).to_string());
      const auto seq = power_case(pc);
      const auto iso = iso_with_witness(omega_power(trivial_module(p), -(m - 1)), from_skew_partition(staircase(m), p),
                                        "Omega^-" + std::to_string(m - 1) + "(k)");
      o.pass = o.pass && seq.pass && iso.pass;
      o.detail += "m=" + std::to_string(m) + ": " + seq.detail + "; " + iso.detail + ". ";
    }
    return o;
  });

  criterion("9", "Omega((4,1)) = (3), Omega^-1((3)) = (4,1) up to frees", 0, [] {
    const GroupSchemeParams p{1, 2};
    const auto hook = from_skew_partition(SkewPartition::parse("4,1"), p);
    const auto three = from_skew_partition(SkewPartition::parse("3"), p);
    const auto a = iso_with_witness(syzygy(hook), three, "Omega((4,1)) vs (3)");
    const auto b = iso_with_witness(strip_free(cosyzygy(three)), hook, "Omega^-1((3)) vs (4,1)");
    return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
  });

  criterion("10", "alpha vs group structure on V x V*, dims 3 and 5", 0, [] {
    std::size_t n = 0, equal = 0;
    for (std::size_t d : {3, 5}) {
      for (const auto& c : enumerate_shapes(d)) {
        ++n;
        equal += compare_structures(c.shape, c.params, 1).all_equal;
      }
    }
    return Outcome{n == 9 && equal == n, std::to_string(equal) + "/" + std::to_string(n) + " shapes agree"};
  });

  criterion("11", "quasi-polynomial fits for the Table 12 subset, n <= 8", 0, [] {
    Outcome o{true, ""};
    for (const auto& pc : cli::table12_cases()) {
      const auto run = pv_sequence(SkewPartition::parse(pc.shape), {pc.r, pc.s}, TensorStructure::Alpha, pc.n_max);
      const auto qp = fit_values(run.values());
      const std::string got = qp ? pretty(*qp, pc.var) : "none";
      const bool ok = qp && *qp == pc.expected && got == pc.expected_text;
      o.pass = o.pass && ok;
      o.detail += pc.name + " -> " + got + (ok ? "" : " (expected " + pc.expected_text + ")") + "; ";
    }
    return o;
  });

  criterion("12a", "module axioms on random constructions", 0, [] {
    std::mt19937_64 rng(12);
    const GroupSchemeParams p{2, 2};
    std::vector<GradedModule> pool;
    for (std::size_t d = 1; d <= 5; ++d)
      for (const auto& c : enumerate_shapes(d, 2, 2))
        pool.push_back(from_skew_partition(fits(c.shape, p) ? c.shape : flip_diagonal(c.shape), p));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t ok = 0;
    for (std::size_t iter = 0; iter < kRandomConstructions; ++iter) {
      const auto& a = pool[pick(rng)];
      const auto& b = pool[pick(rng)];
      GradedModule m;
      switch (iter % 6) {
        case 0: m = tensor_alpha(a, b); break;
        case 1: m = tensor_group(a, b); break;
        case 2: m = dual_alpha(tensor_alpha(a, b)); break;
        case 3: m = dual_group(tensor_group(a, b)); break;
        case 4: m = direct_sum(a, dual_group(b)); break;
        default: m = syzygy(a); break;
      }
      ok += !m.axiom_violation().has_value();
    }
    return Outcome{ok == kRandomConstructions, std::to_string(ok) + "/" + std::to_string(kRandomConstructions)};
  });

  criterion("12b", "dim-sum and seed independence, all shapes dim <= 7", 0, [] {
    std::size_t n = 0, ok = 0;
    for (const auto& c : shapes_up_to(7)) {
      const auto m = v_dual(from_skew_partition(c.shape, c.params));
      DecomposeOptions a, b;
      b.seed = 0x5eed;
      const auto da = decompose(m, a), db = decompose(m, b);
      std::size_t sum = 0;
      for (auto d : da.dims()) sum += d;
      ++n;
      ok += sum == m.dim() && da.dims() == db.dims() && !da.partial;
    }
    return Outcome{ok == n, std::to_string(ok) + "/" + std::to_string(n) + " shapes"};
  });

  criterion("12c", "k occurs exactly once in V x V*, odd shapes dim <= 7", 0, [] {
    std::size_t n = 0, ok = 0;
    for (const auto& c : shapes_up_to(7)) {
      if (c.dim() % 2 == 0) continue;
      const auto d = decompose(v_dual(from_skew_partition(c.shape, c.params)));
      std::size_t ones = 0;
      for (const auto& s : d.summands)
        if (s.module.dim() == 1) ones += s.multiplicity;
      ++n;
      ok += ones == 1;
    }
    return Outcome{ok == n, std::to_string(ok) + "/" + std::to_string(n) + " shapes"};
  });

  criterion("12d", "mod-4 flags on every run of criteria 4-8", 0, [] {
    std::size_t steps = 0, ok = 0;
    for (const auto& run : corollary_runs) {
      for (const auto& s : run.steps) {
        ++steps;
        ok += s.others_div4 && s.mod4_congruent && s.unique_odd;
      }
    }
    return Outcome{!corollary_runs.empty() && ok == steps,
                   std::to_string(ok) + "/" + std::to_string(steps) + " steps over " +
                       std::to_string(corollary_runs.size()) + " runs"};
  });

  criterion("12e", "dual is the 180-degree rotation, all shapes dim <= 7", 0, [] {
    std::size_t n = 0, ok = 0;
    for (const auto& c : shapes_up_to(7)) {
      const auto v = from_skew_partition(c.shape, c.params);
      const auto rot = from_skew_partition(rotate_180(c.shape), c.params);
      const auto verdict = iso_test(dual_alpha(v), rot);
      ++n;
      ok += verdict.kind == IsoKind::Isomorphic && verdict.witness && verify_witness(dual_alpha(v), rot, *verdict.witness);
    }
    return Outcome{ok == n, std::to_string(ok) + "/" + std::to_string(n) + " shapes"};
  });

  criterion("12f", "diagonal flip keeps the V x V* multiset, dim 5", 0, [] {
    std::size_t n = 0, ok = 0;
    for (const auto& c : enumerate_shapes(5)) {
      const auto v = from_skew_partition(c.shape, c.params);
      const auto f = from_skew_partition(flip_diagonal(c.shape), {c.params.s, c.params.r});
      ++n;
      ok += decompose(v_dual(v)).dims() == decompose(v_dual(f)).dims();
    }
    return Outcome{ok == n && n == 7, std::to_string(ok) + "/" + std::to_string(n) + " shapes"};
  });

  criterion("12g", "Omega(V) x W = Omega(V x W) up to frees over alpha(1,1)", 0, [] {
    const GroupSchemeParams p{1, 1};
    std::vector<SkewPartition> pool;
    for (std::size_t d = 1; d <= 5; ++d)
      for (const auto& c : enumerate_shapes(d, 1, 1)) pool.push_back(fits(c.shape, p) ? c.shape : flip_diagonal(c.shape));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < kOmegaPairs; ++i) {
      const auto v = from_skew_partition(pool[pick(rng)], p);
      const auto w = from_skew_partition(pool[pick(rng)], p);
      ok += support::isomorphic_up_to_free(tensor_alpha(syzygy(v), w), syzygy(tensor_alpha(v, w)));
    }
    return Outcome{ok == kOmegaPairs, std::to_string(ok) + "/" + std::to_string(kOmegaPairs) + " pairs"};
  });

  criterion("12h", "bit linear algebra against naive oracles", 0, [] {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> size(1, 70);
    std::size_t cases = 0, ok = 0;
    while (cases < kFuzzCases) {
      const std::size_t r = size(rng), k = size(rng), c = size(rng);
      const auto a = BitMatrix::random(r, k, rng);
      const auto b = BitMatrix::random(k, c, rng);
      const auto da = oracle::to_dense(a);
      const auto prod = oracle::from_dense(oracle::multiply(da, oracle::to_dense(b), k, c), c);
      ++cases;
      ok += mul(a, b, MulAlgorithm::RowXor) == prod && mul(a, b, MulAlgorithm::FourRussians) == prod;
      ++cases;
      const std::size_t rk = oracle::rank(da, k);
      ok += rank(a) == rk && nullspace(a).dim() == k - rk;
      ++cases;
      const auto rhs = BitVector::random(r, rng);
      std::vector<int> drhs(r);
      for (std::size_t i = 0; i < r; ++i) drhs[i] = rhs.get(i);
      const auto x = solve(a, rhs);
      ok += x.has_value() == oracle::consistent(da, drhs, k) && (!x || mul(a, *x) == rhs);
      ++cases;
      const std::size_t p = r % 6 + 1, q = c % 6 + 1;
      const auto s = BitMatrix::random(p, q, rng), t = BitMatrix::random(q, p, rng);
      ok += kron(s, t) == oracle::from_dense(oracle::kron(oracle::to_dense(s), oracle::to_dense(t), q, p), q * p);
    }
    return Outcome{ok == cases, std::to_string(ok) + "/" + std::to_string(cases) + " cases"};
  });

  criterion("13", "omega_probe on (4,2)/(1), i,j <= 4, k <= 3", 0, [] {
    const auto v = from_skew_partition(SkewPartition::parse("4,2/1"), {1, 2});
    const auto report = omega_probe(v, 4, 3);
    const bool pass = report.isomorphic == 0 && report.inconclusive == 0 && !report.entries.empty();
    return Outcome{pass, std::to_string(report.entries.size()) + " comparisons, " + std::to_string(report.isomorphic) +
                             " isomorphic, " + std::to_string(report.inconclusive) + " inconclusive"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
