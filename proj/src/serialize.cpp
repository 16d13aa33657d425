#include "skewtensor/serialize.hpp"

namespace skewtensor {

using nlohmann::json;

json to_json(const BitMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).to_string());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"bits", rows}};
}

BitMatrix bitmatrix_from_json(const json& j) {
  BitMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& bits = j.at("bits");
  for (std::size_t i = 0; i < m.rows(); ++i) m.set_row(i, BitVector::from_string(bits.at(i).get<std::string>()));
  return m;
}

json to_json(const GradedModule& m) {
  json j = {{"r", m.params().r}, {"s", m.params().s}, {"dim", m.dim()}, {"x", to_json(m.x())}, {"y", to_json(m.y())}};
  if (m.is_graded()) {
    json g = json::array();
    for (const auto& d : *m.grading()) g.push_back({d.i, d.j});
    j["grading"] = g;
  } else {
    j["grading"] = nullptr;
  }
  return j;
}

GradedModule module_from_json(const json& j) {
  GroupSchemeParams p{j.at("r").get<int>(), j.at("s").get<int>()};
  std::optional<std::vector<Degree>> g;
  if (j.contains("grading") && !j.at("grading").is_null()) {
    g.emplace();
    for (const auto& d : j.at("grading")) g->push_back({d.at(0).get<int>(), d.at(1).get<int>()});
  }
  return GradedModule(p, bitmatrix_from_json(j.at("x")), bitmatrix_from_json(j.at("y")), std::move(g));
}

json to_json(const Certificate& c) { return {{"level", to_string(c.level)}, {"tries", c.tries}, {"details", c.details}}; }

json to_json(const Decomposition& d, bool include_modules) {
  json summands = json::array();
  for (const auto& s : d.summands) {
    json e = {{"dim", s.module.dim()}, {"multiplicity", s.multiplicity}, {"free", s.free}, {"certificate", to_json(s.certificate)}};
    if (include_modules) e["module"] = to_json(s.module);
    summands.push_back(std::move(e));
  }
  json j = {{"summands", summands},
            {"dims", d.dims()},
            {"total_dim", d.total_dim},
            {"odd_summand", d.odd_summand ? json(*d.odd_summand) : json(nullptr)},
            {"partial", d.partial},
            {"seed", d.seed},
            {"seconds", d.seconds},
            {"warnings", d.warnings}};
  return j;
}

json to_json(const StepReport& s) {
  json j = {{"n", s.n},
            {"tensor_dim", s.tensor_dim},
            {"odd_dim", s.odd_dim},
            {"even_dims", s.even_dims},
            {"free_rank", s.free_rank},
            {"unique_odd", s.unique_odd},
            {"others_div4", s.others_div4},
            {"mod4_congruent", s.mod4_congruent},
            {"partial", s.partial},
            {"seconds", s.seconds},
            {"warnings", s.warnings}};
  j["trivial_multiplicity_one"] = s.trivial_multiplicity_one ? json(*s.trivial_multiplicity_one) : json(nullptr);
  j["full_power_split"] = s.full_power_split ? json(*s.full_power_split) : json(nullptr);
  return j;
}

json to_json(const PowerRun& run, bool include_evidence) {
  json seq = json::array();
  for (const auto& [n, d] : run.sequence) seq.push_back({n, d});
  json steps = json::array();
  for (const auto& s : run.steps) steps.push_back(to_json(s));
  json j = {{"shape", run.shape.lambda().empty() ? "" : run.shape.to_string()},
            {"r", run.params.r},
            {"s", run.params.s},
            {"structure", to_string(run.structure)},
            {"n_max", run.n_max},
            {"seed", run.seed},
            {"sequence", seq},
            {"steps", steps},
            {"failed_step", run.failed_step ? json(*run.failed_step) : json(nullptr)},
            {"failure", run.failure},
            {"partial", run.partial},
            {"seconds", run.seconds}};
  if (include_evidence && run.failure_evidence) j["evidence"] = to_json(*run.failure_evidence, true);
  return j;
}

json to_json(const QuasiPolynomial& qp) { return {{"period", qp.period}, {"polys", qp.polys}, {"offset", qp.offset}}; }

QuasiPolynomial quasi_polynomial_from_json(const json& j) {
  QuasiPolynomial qp;
  qp.period = j.at("period").get<long long>();
  qp.polys = j.at("polys").get<std::vector<std::vector<long long>>>();
  qp.offset = j.at("offset").get<long long>();
  return qp;
}

json to_json(const OmegaProbeReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"verdict", e.verdict}, {"invariant", e.invariant},
                       {"dim_vi", e.dim_vi}, {"dim_omega", e.dim_omega}});
  }
  return {{"odd_dims", r.odd_dims}, {"entries", entries}, {"isomorphic", r.isomorphic}, {"inconclusive", r.inconclusive}};
}

}  // namespace skewtensor
