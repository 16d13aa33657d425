#pragma once

#include <json.hpp>

#include "skewtensor/decompose.hpp"
#include "skewtensor/homology.hpp"
#include "skewtensor/powerlab.hpp"
#include "skewtensor/qpfit.hpp"

namespace skewtensor {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const BitMatrix& m);  // list of row strings
BitMatrix bitmatrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GradedModule& m);
GradedModule module_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& c);
// Omits matrices unless include_modules is set.
nlohmann::json to_json(const Decomposition& d, bool include_modules = false);
nlohmann::json to_json(const StepReport& s);
nlohmann::json to_json(const PowerRun& run, bool include_evidence = false);
nlohmann::json to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasi_polynomial_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OmegaProbeReport& r);

}  // namespace skewtensor
