#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewtensor/decompose.hpp"
#include "skewtensor/homology.hpp"
#include "skewtensor/powerlab.hpp"
#include "skewtensor/qpfit.hpp"
#include "skewtensor/serialize.hpp"
#include "skewtensor/shapes.hpp"

namespace py = pybind11;
using namespace skewtensor;

namespace {

GroupSchemeParams params_for(const SkewPartition& shape, int r, int s) {
  auto p = minimal_params(shape);
  if (r > 0) p.r = r;
  if (s > 0) p.s = s;
  return p;
}

GradedModule build(const std::string& text, int r, int s) {
  const auto shape = SkewPartition::parse(text);
  return from_skew_partition(shape, params_for(shape, r, s));
}

GradedModule expression(const GradedModule& v, const std::string& expr, TensorStructure st) {
  if (expr == "VxV*") return tensor(v, dual(v, st), st);
  if (expr == "VxV") return tensor(v, v, st);
  if (expr == "V") return v;
  throw std::invalid_argument("unknown expression '" + expr + "' (expected V, VxV or VxV*)");
}

}  // namespace

PYBIND11_MODULE(_skewtensor, m) {
  m.doc() = "Monomial modules over alpha(r, s) in characteristic 2";

  py::register_exception<ParseError>(m, "ShapeParseError", PyExc_ValueError);

  m.def("normalize_shape", [](const std::string& text) { return normalized(SkewPartition::parse(text)).to_string(); },
        py::arg("shape"));
  m.def("minimal_params", [](const std::string& text) {
    const auto p = minimal_params(SkewPartition::parse(text));
    return std::pair<int, int>{p.r, p.s};
  }, py::arg("shape"));
  m.def("module_matrices", [](const std::string& text, int r, int s) { return to_json(build(text, r, s)).dump(); },
        py::arg("shape"), py::arg("r") = 0, py::arg("s") = 0);
  m.def("render_diagram", [](const std::string& text) { return render_diagram(SkewPartition::parse(text)); },
        py::arg("shape"));

  m.def("decompose_json",
        [](const std::string& text, const std::string& expr, int r, int s, const std::string& structure,
           std::uint64_t seed) {
          const auto st = parse_structure(structure);
          DecomposeOptions o;
          o.seed = seed;
          py::gil_scoped_release release;
          return to_json(decompose(expression(build(text, r, s), expr, st), o)).dump();
        },
        py::arg("shape"), py::arg("expr") = "VxV*", py::arg("r") = 0, py::arg("s") = 0,
        py::arg("structure") = "alpha", py::arg("seed") = 1);

  m.def("powers_json",
        [](const std::string& text, int n_max, int r, int s, const std::string& structure, std::uint64_t seed) {
          const auto shape = SkewPartition::parse(text);
          const auto st = parse_structure(structure);
          py::gil_scoped_release release;
          return to_json(pv_sequence(shape, params_for(shape, r, s), st, n_max, seed)).dump();
        },
        py::arg("shape"), py::arg("n_max") = 8, py::arg("r") = 0, py::arg("s") = 0,
        py::arg("structure") = "alpha", py::arg("seed") = 1);

  m.def("fit", [](const std::vector<long long>& values, long long first_index, char var) -> std::optional<std::string> {
    const auto qp = fit_values(values, first_index);
    if (!qp) return std::nullopt;
    return pretty(*qp, var);
  }, py::arg("values"), py::arg("first_index") = 1, py::arg("var") = 'n');

  m.def("enumerate_shapes", [](std::size_t dim) {
    std::vector<py::tuple> out;
    for (const auto& c : enumerate_shapes(dim))
      out.push_back(py::make_tuple(c.shape.to_string(), c.params.r, c.params.s, c.orbit_size));
    return out;
  }, py::arg("dim"));

  m.def("syzygy_dims", [](const std::string& text, int t, int r, int s) {
    const auto w = omega_power(build(text, r, s), t);
    return decompose(w).dims();
  }, py::arg("shape"), py::arg("t") = 1, py::arg("r") = 0, py::arg("s") = 0);
}
