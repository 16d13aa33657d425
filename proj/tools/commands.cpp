#include "commands.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "expected.hpp"
#include "skewtensor/decompose.hpp"
#include "skewtensor/homology.hpp"
#include "skewtensor/iso.hpp"
#include "skewtensor/powerlab.hpp"
#include "skewtensor/qpfit.hpp"
#include "skewtensor/serialize.hpp"
#include "skewtensor/shapes.hpp"

namespace skewtensor::cli {

using nlohmann::json;

namespace {

// Timings would make otherwise identical payloads differ between runs.
void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

std::string params_text(GroupSchemeParams p) { return "alpha(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string join(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string cache_key(const std::string& command, const SkewPartition& shape, GroupSchemeParams p,
                      const RunSettings& settings, const std::string& extra) {
  std::ostringstream k;
  k << "v" << kSchemaVersion << '|' << command << '|' << normalized(shape).to_string() << '|' << p.r << '|' << p.s << '|'
    << to_string(settings.structure) << '|' << (settings.graded ? "graded" : "ungraded") << '|' << extra << '|'
    << settings.seed;
  return k.str();
}

json header(const std::string& command, const SkewPartition& shape, GroupSchemeParams p, const RunSettings& settings) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"shape", shape.to_string()}, {"r", p.r},
          {"s", p.s}, {"structure", to_string(settings.structure)}, {"graded", settings.graded}, {"seed", settings.seed}};
}

GradedModule expression_module(const GradedModule& v, const std::string& expr, int n, TensorStructure st) {
  if (expr == "VxV*") return tensor(v, dual(v, st), st);
  if (expr == "VxV") return tensor(v, v, st);
  if (expr == "V^n") {
    if (n < 1) throw std::invalid_argument("V^n needs --n of at least 1");
    GradedModule m = v;
    for (int k = 2; k <= n; ++k) m = tensor(m, v, st);
    return m;
  }
  throw std::invalid_argument("unknown expression '" + expr + "' (expected VxV*, VxV or V^n)");
}

std::optional<QuasiPolynomial> try_fit(const std::vector<long long>& values, std::string& error) {
  try {
    auto qp = fit_values(values, 1);
    if (!qp) error = "not enough terms for a fit";
    return qp;
  } catch (const std::domain_error& e) {
    error = e.what();
    return std::nullopt;
  }
}

CheckResult timed_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.actual = std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

void table_checks(int dim, std::uint64_t seed, std::vector<CheckResult>& out) {
  const auto& rows = table_rows(dim);
  std::set<std::vector<Cell>> listed;
  std::size_t drawn = 0;
  for (const auto& row : rows) {
    for (const auto& text : row.shapes) {
      out.push_back(timed_check("dim" + std::to_string(dim) + " " + text, [&](CheckResult& c) {
        const auto shape = SkewPartition::parse(text);
        listed.insert(canonicalize(shape).cells);
        ++drawn;
        const auto v = from_skew_partition(shape, minimal_params(shape));
        DecomposeOptions o;
        o.seed = seed;
        const auto d = decompose(tensor_alpha(v, dual_alpha(v)), o);
        c.expected = join(row.dims);
        c.actual = join(d.dims());
        c.pass = !d.partial && d.dims() == row.dims;
      }));
    }
  }
  out.push_back(timed_check("dim" + std::to_string(dim) + " enumeration", [&](CheckResult& c) {
    const auto shapes = enumerate_shapes(static_cast<std::size_t>(dim));
    std::set<std::vector<Cell>> found;
    for (const auto& s : shapes) found.insert(s.cells);
    c.expected = std::to_string(drawn) + " shapes, one per orbit";
    c.actual = std::to_string(shapes.size()) + " shapes";
    c.pass = found == listed && shapes.size() == drawn && listed.size() == drawn;
  }));
}

void power_checks(const std::vector<PowerCase>& cases, std::uint64_t seed, std::vector<CheckResult>& out) {
  for (const auto& pc : cases) {
    out.push_back(timed_check(pc.name, [&](CheckResult& c) {
      PowerOptions po;
      po.decompose.seed = seed;
      const auto run = pv_sequence(SkewPartition::parse(pc.shape), {pc.r, pc.s}, TensorStructure::Alpha, pc.n_max, seed, po);
      std::vector<long long> want;
      for (int n = 1; n <= pc.n_max; ++n) want.push_back(eval(pc.expected, n));
      std::string fit_error;
      const auto qp = try_fit(run.values(), fit_error);
      const std::string got_fit = qp ? pretty(*qp, pc.var) : fit_error;
      c.expected = pc.expected_text + " " + join(want);
      c.actual = got_fit + " " + join(run.values());
      if (!run.all_flags_hold()) c.actual += " (flags failed: " + run.failure + ")";
      c.pass = run.values() == want && qp && *qp == pc.expected && got_fit == pc.expected_text && run.all_flags_hold() &&
               !run.partial;
    }));
  }
}

void syzygy_checks(std::uint64_t seed, std::vector<CheckResult>& out) {
  const GroupSchemeParams p11{1, 1};
  for (int m = 2; m <= 4; ++m) {
    out.push_back(timed_check("Omega^-" + std::to_string(m - 1) + "(k) is the " + std::to_string(m) + "-staircase",
                              [&](CheckResult& c) {
                                const auto w = omega_power(trivial_module(p11), -(m - 1));
                                const auto st = from_skew_partition(staircase(m), p11);
                                const auto v = iso_test(w, st, seed);
                                c.expected = "isomorphic with witness";
                                c.actual = to_string(v.kind);
                                c.pass = v.kind == IsoKind::Isomorphic && v.witness && verify_witness(w, st, *v.witness);
                              }));
  }
  const GroupSchemeParams p12{1, 2};
  const auto four_one = from_skew_partition(SkewPartition::parse("4,1"), p12);
  const auto three = from_skew_partition(SkewPartition::parse("3"), p12);
  out.push_back(timed_check("Omega((4,1)) is (3)", [&](CheckResult& c) {
    const auto w = syzygy(four_one);
    const auto v = iso_test(w, three, seed);
    c.expected = "isomorphic with witness";
    c.actual = to_string(v.kind) + ", dim " + std::to_string(w.dim());
    c.pass = v.kind == IsoKind::Isomorphic && v.witness && verify_witness(w, three, *v.witness);
  }));
  out.push_back(timed_check("Omega^-1((3)) without frees is (4,1)", [&](CheckResult& c) {
    const auto w = strip_free(cosyzygy(three));
    const auto v = iso_test(w, four_one, seed);
    c.expected = "isomorphic with witness";
    c.actual = to_string(v.kind) + ", dim " + std::to_string(w.dim());
    c.pass = v.kind == IsoKind::Isomorphic && v.witness && verify_witness(w, four_one, *v.witness);
  }));
}

std::string render_decompose(const json& j) {
  std::ostringstream o;
  const auto& d = j.at("decomposition");
  o << "shape " << j.at("shape").get<std::string>() << " over alpha(" << j.at("r") << "," << j.at("s") << "), "
    << j.at("expr").get<std::string>();
  if (!j.at("n").is_null()) o << " with n = " << j.at("n");
  o << ", structure " << j.at("structure").get<std::string>() << "\n";
  o << "summands: " << d.at("dims").dump() << "\n";
  for (const auto& s : d.at("summands")) {
    o << "  dim " << std::setw(4) << s.at("dim").get<std::size_t>() << "  x" << s.at("multiplicity").get<std::size_t>()
      << "  " << s.at("certificate").at("level").get<std::string>() << (s.at("free").get<bool>() ? "  free" : "")
      << "\n";
  }
  if (!d.at("odd_summand").is_null()) {
    o << "odd summand: dim " << d.at("summands").at(d.at("odd_summand").get<std::size_t>()).at("dim") << "\n";
  }
  if (d.at("partial").get<bool>()) o << "PARTIAL: resource guard hit, result incomplete\n";
  for (const auto& w : d.at("warnings")) o << "warning: " << w.get<std::string>() << "\n";
  return o.str();
}

std::string render_powers(const json& j) {
  std::ostringstream o;
  const auto& run = j.at("run");
  o << "shape " << j.at("shape").get<std::string>() << " over alpha(" << j.at("r") << "," << j.at("s")
    << "), structure " << j.at("structure").get<std::string>() << ", seed " << j.at("seed") << "\n";
  o << "  n  dim V_n  unique_odd  even=0mod4  mod4\n";
  for (const auto& s : run.at("steps")) {
    auto yn = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
    o << std::setw(3) << s.at("n").get<int>() << std::setw(9) << s.at("odd_dim").get<std::size_t>() << std::setw(12)
      << yn(s.at("unique_odd")) << std::setw(12) << yn(s.at("others_div4")) << std::setw(6) << yn(s.at("mod4_congruent"))
      << "\n";
  }
  o << "sequence: " << j.at("sequence").dump() << "\n";
  o << "fit: " << (j.at("fit_text").is_null() ? "none (" + j.at("fit_error").get<std::string>() + ")"
                                               : j.at("fit_text").get<std::string>())
    << "\n";
  const auto& t = j.at("trivial_multiplicity_one");
  o << "k once in V (x) V*: " << (t.is_null() ? "untested" : t.get<bool>() ? "yes" : "no") << "\n";
  o << "all flags hold: " << (j.at("all_flags_hold").get<bool>() ? "yes" : "no") << "\n";
  if (j.at("violation").get<bool>()) o << "VIOLATION: " << run.at("failure").get<std::string>() << "\n";
  return o.str();
}

std::string render_syzygy(const json& j) {
  std::ostringstream o;
  o << "Omega^" << j.at("t") << " of " << j.at("shape").get<std::string>() << " over alpha(" << j.at("r") << ","
    << j.at("s") << "): dim " << j.at("dim") << "\n";
  if (j.at("zero").get<bool>()) {
    o << "zero module\n";
  } else if (!j.at("match").is_null()) {
    o << "shape: " << j.at("match").get<std::string>() << "\n";
  } else {
    o << "no monomial shape matched" << (j.at("catalog_searched").get<bool>() ? "" : " (catalog not searched)") << "\n";
  }
  return o.str();
}

std::string render_verify(const VerifyReport& r) {
  std::ostringstream o;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    if (c.pass) {
      ++passed;
      o << "PASS " << c.name << ": " << c.actual << "\n";
    } else {
      o << "FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
  }
  o << passed << "/" << r.checks.size() << " checks passed\n";
  return o.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

std::string decompose_payload(const SkewPartition& shape, GroupSchemeParams params, const std::string& expr, int n,
                              const RunSettings& settings) {
  const std::string key = cache_key("decompose", shape, params, settings, expr + "|" + std::to_string(n));
  if (settings.cache) {
    if (auto hit = settings.cache->get(key)) return *hit;
  }
  const auto v = from_skew_partition(shape, params);
  const auto m = expression_module(v, expr, n, settings.structure);
  DecomposeOptions o;
  o.graded_first = settings.graded;
  o.seed = settings.seed;
  json j = header("decompose", shape, params, settings);
  j["expr"] = expr;
  j["n"] = expr == "V^n" ? json(n) : json(nullptr);
  j["decomposition"] = to_json(decompose(m, o));
  strip_timing(j);
  const std::string payload = j.dump();
  if (settings.cache) settings.cache->put(key, settings.seed, payload);
  return payload;
}

PowersOutcome powers_payload(const SkewPartition& shape, GroupSchemeParams params, int n_max, const RunSettings& settings) {
  if (shape.size() % 2 == 0) throw std::invalid_argument("powers needs an odd-dimensional shape");
  if (!is_connected(shape)) throw std::invalid_argument("powers needs a connected shape");
  if (n_max < 1) throw std::invalid_argument("--nmax must be at least 1");
  const std::string key = cache_key("powers", shape, params, settings, std::to_string(n_max));
  if (settings.cache) {
    if (auto hit = settings.cache->get(key)) return {*hit, json::parse(*hit).at("violation").get<bool>(), std::nullopt};
  }
  PowerOptions po;
  po.decompose.graded_first = settings.graded;
  po.decompose.seed = settings.seed;
  const auto run = pv_sequence(shape, params, settings.structure, n_max, settings.seed, po);
  std::string fit_error;
  const auto qp = try_fit(run.values(), fit_error);

  json j = header("powers", shape, params, settings);
  j["n_max"] = n_max;
  j["sequence"] = run.values();
  j["fit"] = qp ? to_json(*qp) : json(nullptr);
  j["fit_text"] = qp ? json(pretty(*qp)) : json(nullptr);
  j["fit_error"] = fit_error;
  json trivial = nullptr;
  for (const auto& s : run.steps) {
    if (s.trivial_multiplicity_one) trivial = *s.trivial_multiplicity_one;
  }
  j["trivial_multiplicity_one"] = trivial;
  j["all_flags_hold"] = run.all_flags_hold();
  const bool violation = run.failed_step.has_value() || !run.all_flags_hold();
  j["violation"] = violation;
  j["run"] = to_json(run);
  strip_timing(j);

  PowersOutcome outcome{j.dump(), violation, std::nullopt};
  if (violation) {
    // Violations are not cached; the evidence file is the durable record.
    outcome.evidence = to_json(run, true);
  } else if (settings.cache) {
    settings.cache->put(key, settings.seed, outcome.payload);
  }
  return outcome;
}

std::string syzygy_payload(const SkewPartition& shape, GroupSchemeParams params, int t, const RunSettings& settings) {
  const std::string key = cache_key("syzygy", shape, params, settings, std::to_string(t));
  if (settings.cache) {
    if (auto hit = settings.cache->get(key)) return *hit;
  }
  const auto w = omega_power(from_skew_partition(shape, params), t);
  json j = header("syzygy", shape, params, settings);
  j["t"] = t;
  j["dim"] = w.dim();
  j["zero"] = w.dim() == 0;
  j["match"] = nullptr;
  j["inconclusive"] = json::array();
  // The catalog is every connected shape of the same dimension that fits the group.
  constexpr std::size_t kCatalogMaxDim = 9;
  j["catalog_searched"] = w.dim() > 0 && w.dim() <= kCatalogMaxDim;
  if (j["catalog_searched"].get<bool>()) {
    const auto target = w.ungraded();
    for (const auto& c : enumerate_shapes(w.dim())) {
      std::set<std::vector<Cell>> tried;
      for (const auto& member : symmetry_orbit(c.shape)) {
        if (!tried.insert(member.cells()).second || !fits(member, params)) continue;
        const auto verdict = iso_test(target, from_skew_partition(member, params).ungraded(), settings.seed);
        if (verdict.kind == IsoKind::Isomorphic) {
          j["match"] = member.to_string();
          break;
        }
        if (verdict.kind == IsoKind::Inconclusive) j["inconclusive"].push_back(member.to_string());
      }
      if (!j["match"].is_null()) break;
    }
  }
  const std::string payload = j.dump();
  if (settings.cache) settings.cache->put(key, settings.seed, payload);
  return payload;
}

bool VerifyReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

VerifyReport verify_tables(const std::string& which, std::uint64_t seed) {
  VerifyReport r;
  r.which = which;
  const bool all = which == "all";
  if (!all && which != "dim3" && which != "dim5" && which != "dim7" && which != "corollaries" &&
      which != "table12-subset") {
    throw std::invalid_argument("unknown table '" + which + "'");
  }
  if (all || which == "dim3") table_checks(3, seed, r.checks);
  if (all || which == "dim5") table_checks(5, seed, r.checks);
  if (all || which == "dim7") table_checks(7, seed, r.checks);
  if (all || which == "corollaries") {
    power_checks(corollary_cases(), seed, r.checks);
    syzygy_checks(seed, r.checks);
  }
  if (all || which == "table12-subset") power_checks(table12_cases(), seed, r.checks);
  return r;
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return {{"schema_version", kSchemaVersion}, {"command", "verify-tables"}, {"which", report.which},
          {"checks", checks}, {"pass", report.pass()}};
}

SweepSummary sweep(int dim, std::optional<GroupSchemeParams> params, int n_max, unsigned jobs,
                   const RunSettings& settings) {
  if (dim < 1 || dim % 2 == 0) throw std::invalid_argument("sweep needs an odd --dim");
  const auto shapes = enumerate_shapes(static_cast<std::size_t>(dim), params ? params->r : 30, params ? params->s : 30);
  SweepSummary summary;
  summary.dim = dim;
  summary.n_max = n_max;
  summary.rows.resize(shapes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < shapes.size();) {
      SweepRow& row = summary.rows[i];
      SkewPartition shape = shapes[i].shape;
      GroupSchemeParams p = shapes[i].params;
      if (params) {
        if (!fits(shape, *params)) shape = flip_diagonal(shape);
        p = *params;
      }
      row.shape = shape.to_string();
      row.params = p;
      try {
        const auto outcome = powers_payload(shape, p, n_max, settings);
        const auto j = json::parse(outcome.payload);
        row.values = j.at("sequence").get<std::vector<long long>>();
        row.fit = j.at("fit").is_null() ? "-" : pretty(quasi_polynomial_from_json(j.at("fit")), 'x');
        row.flags_hold = j.at("all_flags_hold").get<bool>();
        row.status = outcome.violation ? "violation" : "ok";
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(shapes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& row : summary.rows) summary.any_violation |= row.status == "violation";
  return summary;
}

json to_json(const SweepSummary& summary) {
  json rows = json::array();
  for (const auto& r : summary.rows) {
    rows.push_back({{"shape", r.shape}, {"r", r.params.r}, {"s", r.params.s}, {"status", r.status},
                    {"sequence", r.values}, {"fit", r.fit}, {"all_flags_hold", r.flags_hold}});
  }
  return {{"schema_version", kSchemaVersion}, {"command", "sweep"}, {"dim", summary.dim},
          {"n_max", summary.n_max}, {"rows", rows}, {"any_violation", summary.any_violation}};
}

std::string render_sweep(const SweepSummary& summary) {
  std::ostringstream o;
  o << "dim " << summary.dim << ", n <= " << summary.n_max << "\n";
  o << std::left << std::setw(18) << "shape" << std::setw(12) << "group" << std::setw(22) << "P_V(n)" << std::setw(7)
    << "flags"
    << "status\n";
  for (const auto& r : summary.rows) {
    o << std::setw(18) << r.shape << std::setw(12) << params_text(r.params) << std::setw(22) << r.fit << std::setw(7)
      << (r.flags_hold ? "ok" : "FAIL") << r.status << "\n";
  }
  return o.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GF(2) computations with monomial modules over alpha(r,s)", "skewtensor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "skewtensor 0.1.0");

  struct Common {
    std::string shape;
    int r = 0, s = 0;  // 0 means the shape's minimal value
    std::string structure = "alpha";
    bool graded = true;
    std::uint64_t seed = 1;
    bool json = false;
    std::string cache;
    bool no_cache = false;
  } c;
  int n_max = 8, jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int n = 0, t = 1, dim = 0;
  std::string expr, which, out_dir;

  auto add_common = [&](CLI::App* sub, bool needs_shape) {
    if (needs_shape) sub->add_option("shape", c.shape, "Skew partition, e.g. 5,4,2,2,1,1/3,2")->required();
    sub->add_option("--r", c.r, "x^(2^r) = 0; defaults to the shape's minimum")->check(CLI::Range(1, 30));
    sub->add_option("--s", c.s, "y^(2^s) = 0; defaults to the shape's minimum")->check(CLI::Range(1, 30));
    sub->add_option("--structure", c.structure, "Tensor structure")->check(CLI::IsMember({"alpha", "group"}));
    sub->add_flag("--graded,!--no-graded", c.graded, "Decompose degree blocks first");
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_flag("--json", c.json, "Print the JSON payload");
    sub->add_option("--cache", c.cache, "Cache directory");
    sub->add_flag("--no-cache", c.no_cache, "Neither read nor write the cache");
  };

  auto* diagram = app.add_subcommand("diagram", "Draw a monomial diagram");
  diagram->add_option("shape", c.shape, "Skew partition")->required();
  diagram->add_flag("--json", c.json, "Print JSON");

  auto* dec = app.add_subcommand("decompose", "Decompose VxV*, VxV or V^n");
  add_common(dec, true);
  dec->add_option("expr", expr, "VxV*, VxV or V^n")->required()->check(CLI::IsMember({"VxV*", "VxV", "V^n"}));
  dec->add_option("--n", n, "Exponent for V^n");

  auto* powers = app.add_subcommand("powers", "Odd summands of tensor powers and their quasi-polynomial");
  add_common(powers, true);
  powers->add_option("--nmax", n_max, "Largest power")->check(CLI::Range(1, 1000));

  auto* verify = app.add_subcommand("verify-tables", "Recompute the reference tables");
  verify->add_option("which", which, "dim3, dim5, dim7, corollaries, table12-subset or all")
      ->required()
      ->check(CLI::IsMember({"dim3", "dim5", "dim7", "corollaries", "table12-subset", "all"}));
  verify->add_option("--seed", c.seed, "Random seed");
  verify->add_flag("--json", c.json, "Print JSON");

  auto* sw = app.add_subcommand("sweep", "Run powers over every shape of a dimension");
  add_common(sw, false);
  sw->add_option("--dim", dim, "Shape dimension (odd)")->required();
  sw->add_option("--nmax", n_max, "Largest power")->check(CLI::Range(1, 1000));
  sw->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
  sw->add_option("--out", out_dir, "Results directory (default sweep-dim<D>)");

  auto* syz = app.add_subcommand("syzygy", "Omega^t up to free summands");
  add_common(syz, true);
  syz->add_option("--t", t, "Power of Omega; negative for cosyzygies")->allow_extra_args(false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<ResultCache> cache;
  if (!c.no_cache) cache.emplace(ResultCache::resolve(c.cache.empty() ? std::nullopt : std::optional(c.cache)));
  RunSettings settings;
  settings.graded = c.graded;
  settings.seed = c.seed;
  settings.cache = cache ? &*cache : nullptr;

  try {
    settings.structure = parse_structure(c.structure);
    auto shape_and_params = [&]() {
      const auto shape = SkewPartition::parse(c.shape);
      const auto min = minimal_params(shape);
      const GroupSchemeParams p{c.r ? c.r : min.r, c.s ? c.s : min.s};
      if (!fits(shape, p)) {
        // from_skew_partition reports which part or column is too long.
        from_skew_partition(shape, p);
      }
      return std::pair{shape, p};
    };

    if (diagram->parsed()) {
      const auto shape = SkewPartition::parse(c.shape);
      if (c.json) {
        json cells = json::array();
        for (const auto& cell : shape.cells()) cells.push_back({cell.i, cell.j});
        out << json{{"shape", shape.to_string()}, {"dim", shape.size()}, {"cells", cells},
                    {"diagram", render_diagram(shape)}}
                   .dump()
            << "\n";
      } else {
        out << render_diagram(shape);
      }
      return kOk;
    }
    if (dec->parsed()) {
      const auto [shape, p] = shape_and_params();
      const std::string payload = decompose_payload(shape, p, expr, n, settings);
      out << (c.json ? payload + "\n" : render_decompose(json::parse(payload)));
      return kOk;
    }
    if (powers->parsed()) {
      const auto [shape, p] = shape_and_params();
      const auto outcome = powers_payload(shape, p, n_max, settings);
      out << (c.json ? outcome.payload + "\n" : render_powers(json::parse(outcome.payload)));
      if (outcome.violation) {
        if (outcome.evidence) {
          const std::filesystem::path dir = cache ? cache->dir() : std::filesystem::path(".");
          std::filesystem::create_directories(dir);
          char name[48];
          std::snprintf(name, sizeof name, "violation-%016llx.json",
                        static_cast<unsigned long long>(fnv1a(outcome.payload)));
          write_file(dir / name, outcome.evidence->dump(2));
          err << "conjecture violation; evidence written to " << (dir / name).string() << "\n";
        }
        return kViolation;
      }
      return kOk;
    }
    if (verify->parsed()) {
      const auto report = verify_tables(which, c.seed);
      out << (c.json ? to_json(report).dump() + "\n" : render_verify(report));
      return report.pass() ? kOk : kMismatch;
    }
    if (sw->parsed()) {
      std::optional<GroupSchemeParams> p;
      if (c.r || c.s) p = GroupSchemeParams{c.r ? c.r : 30, c.s ? c.s : 30};
      const auto summary = sweep(dim, p, n_max, static_cast<unsigned>(jobs), settings);
      const std::filesystem::path dir = out_dir.empty() ? "sweep-dim" + std::to_string(dim) : out_dir;
      std::filesystem::create_directories(dir);
      const std::string text = render_sweep(summary);
      write_file(dir / "summary.json", to_json(summary).dump(2) + "\n");
      write_file(dir / "summary.txt", text);
      out << (c.json ? to_json(summary).dump() + "\n" : text);
      return summary.any_violation ? kViolation : kOk;
    }
    if (syz->parsed()) {
      const auto [shape, p] = shape_and_params();
      const std::string payload = syzygy_payload(shape, p, t, settings);
      out << (c.json ? payload + "\n" : render_syzygy(json::parse(payload)));
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace skewtensor::cli
