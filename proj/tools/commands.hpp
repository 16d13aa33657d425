#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cache.hpp"
#include "skewtensor/module.hpp"
#include "skewtensor/partition.hpp"

namespace skewtensor::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kViolation = 2, kUsage = 3 };

// Parses and runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct RunSettings {
  TensorStructure structure = TensorStructure::Alpha;
  bool graded = true;
  std::uint64_t seed = 1;
  ResultCache* cache = nullptr;  // null disables caching
};

// Payloads are the JSON documents the CLI prints with --json and stores in the cache.
std::string decompose_payload(const SkewPartition& shape, GroupSchemeParams params, const std::string& expr, int n,
                              const RunSettings& settings);

struct PowersOutcome {
  std::string payload;
  bool violation = false;
  std::optional<nlohmann::json> evidence;  // present only when freshly computed with a violation
};
PowersOutcome powers_payload(const SkewPartition& shape, GroupSchemeParams params, int n_max, const RunSettings& settings);

std::string syzygy_payload(const SkewPartition& shape, GroupSchemeParams params, int t, const RunSettings& settings);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  double seconds = 0;
};

struct VerifyReport {
  std::string which;
  std::vector<CheckResult> checks;
  bool pass() const;
};

// which: dim3, dim5, dim7, corollaries, table12-subset or all.
VerifyReport verify_tables(const std::string& which, std::uint64_t seed = 1);
nlohmann::json to_json(const VerifyReport& report);

struct SweepRow {
  std::string shape;
  GroupSchemeParams params;
  std::string status;  // "ok", "violation" or "error: ..."
  std::vector<long long> values;
  std::string fit;
  bool flags_hold = false;
};

struct SweepSummary {
  int dim = 0;
  int n_max = 0;
  std::vector<SweepRow> rows;
  bool any_violation = false;
};

// Shapes are run with their own minimal (r, s) unless params is given, in which
// case every shape (or its transpose) must fit it.
SweepSummary sweep(int dim, std::optional<GroupSchemeParams> params, int n_max, unsigned jobs,
                   const RunSettings& settings);
nlohmann::json to_json(const SweepSummary& summary);
std::string render_sweep(const SweepSummary& summary);

}  // namespace skewtensor::cli
