#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cache.hpp"
#include "commands.hpp"
#include "expected.hpp"
#include "skewtensor/shapes.hpp"

using namespace skewtensor;
using namespace skewtensor::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("skewtensor-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("diagram") {
  auto one = run({"diagram", "1"});
  CHECK(one.code == 0);
  CHECK(one.out == "+--+\n|  |\n+--+\n");
  auto fig = run({"diagram", "5,4,2,2,1,1/3,2", "--json"});
  CHECK(fig.code == 0);
  const auto j = nlohmann::json::parse(fig.out);
  CHECK(j.at("dim") == 10);
  auto bad = run({"diagram", "4,x"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("usage errors exit with 3") {
  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"decompose", "4,1", "VxW", "--no-cache"}).code == 3);
  CHECK(run({"decompose", "5", "--r", "1", "--s", "1", "VxV*", "--no-cache"}).code == 3);
  CHECK(run({"powers", "2,2", "--no-cache"}).code == 3);
  CHECK(run({"decompose", "4,1", "V^n", "--no-cache"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("decompose") {
  TempDir tmp;
  const std::string cache = tmp.path.string();
  auto a = run({"decompose", "1,1,1", "--r", "2", "--s", "1", "VxV*", "--json", "--cache", cache});
  REQUIRE(a.code == 0);
  CHECK(nlohmann::json::parse(a.out).at("decomposition").at("dims") == nlohmann::json({1, 4, 4}));
  auto b = run({"decompose", "3,1,1", "--r", "2", "--s", "2", "VxV", "--json", "--cache", cache});
  CHECK(nlohmann::json::parse(b.out).at("decomposition").at("dims") == nlohmann::json({12, 13}));
  auto c = run({"decompose", "1", "--r", "1", "--s", "1", "VxV*", "--cache", cache});
  CHECK(c.out.find("summands: [1]") != std::string::npos);
  auto d = run({"decompose", "4,1", "V^n", "--n", "2", "--json", "--cache", cache});
  CHECK(nlohmann::json::parse(d.out).at("decomposition").at("dims") == nlohmann::json({4, 4, 8, 9}));
  auto g = run({"decompose", "2,1", "VxV*", "--structure", "group", "--json", "--cache", cache});
  CHECK(nlohmann::json::parse(g.out).at("structure") == "group");
  CHECK(nlohmann::json::parse(g.out).at("decomposition").at("dims") == nlohmann::json({1, 4, 4}));
}

TEST_CASE("cache hits are byte-identical and keyed by seed") {
  TempDir tmp;
  const std::string cache = tmp.path.string();
  auto first = run({"decompose", "4,2/1", "VxV*", "--json", "--cache", cache, "--seed", "7"});
  auto second = run({"decompose", "4,2/1", "VxV*", "--json", "--cache", cache, "--seed", "7"});
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(tmp.path)) files += e.path().extension() == ".json";
  CHECK(files == 1);
  run({"decompose", "4,2/1", "VxV*", "--json", "--cache", cache, "--seed", "8"});
  files = 0;
  for (const auto& e : fs::directory_iterator(tmp.path)) files += e.path().extension() == ".json";
  CHECK(files == 2);

  // the stored payload is what comes back, even if it was edited on disk
  ResultCache rc(tmp.path);
  rc.put("k", 1, "{\"payload\": 1}");
  CHECK(rc.get("k") == std::string("{\"payload\": 1}"));
  CHECK_FALSE(rc.get("other").has_value());

  // deterministic without the cache as well
  auto x = run({"decompose", "3,2", "VxV*", "--json", "--no-cache"});
  auto y = run({"decompose", "3,2", "VxV*", "--json", "--no-cache"});
  CHECK(x.out == y.out);
}

TEST_CASE("cache directory precedence") {
  CHECK(ResultCache::resolve(std::string("/tmp/flag")) == fs::path("/tmp/flag"));
  ::setenv("SKEWTENSOR_CACHE", "/tmp/env-cache", 1);
  CHECK(ResultCache::resolve(std::nullopt) == fs::path("/tmp/env-cache"));
  CHECK(ResultCache::resolve(std::string("/tmp/flag")) == fs::path("/tmp/flag"));
  ::unsetenv("SKEWTENSOR_CACHE");
  CHECK(ResultCache::resolve(std::nullopt) == fs::path(".skewtensor-cache"));
}

TEST_CASE("powers") {
  TempDir tmp;
  const std::string cache = tmp.path.string();
  auto a = run({"powers", "4,1", "--r", "1", "--s", "2", "--nmax", "8", "--cache", cache});
  CHECK(a.code == 0);
  CHECK(a.out.find("fit: 4n+1") != std::string::npos);
  CHECK(a.out.find("all flags hold: yes") != std::string::npos);
  auto b = run({"powers", "4,2/1", "--r", "1", "--s", "2", "--nmax", "8", "--json", "--cache", cache});
  CHECK(nlohmann::json::parse(b.out).at("fit_text") == "[6n-1, 6n+1]");
  auto c = run({"powers", "1", "--r", "1", "--s", "1", "--nmax", "5", "--json", "--cache", cache});
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j.at("fit_text") == "1");
  CHECK(j.at("sequence") == nlohmann::json({1, 1, 1, 1, 1}));
  auto again = run({"powers", "4,2/1", "--r", "1", "--s", "2", "--nmax", "8", "--json", "--cache", cache});
  CHECK(again.out == b.out);
}

TEST_CASE("syzygy") {
  auto a = run({"syzygy", "4,1", "--r", "1", "--s", "2", "--t", "1", "--no-cache"});
  CHECK(a.code == 0);
  CHECK(a.out.find("shape: 3") != std::string::npos);
  auto b = run({"syzygy", "1", "--r", "1", "--s", "1", "--t", "-1", "--json", "--no-cache"});
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j.at("dim") == 3);
  REQUIRE(j.at("match").is_string());
  const auto match = SkewPartition::parse(j.at("match").get<std::string>());
  CHECK(canonicalize(match).cells == canonicalize(staircase(2)).cells);
  auto c = run({"syzygy", "2,2", "--r", "1", "--s", "1", "--t", "1", "--no-cache"});
  CHECK(c.out.find("zero module") != std::string::npos);
}

TEST_CASE("verify tables") {
  auto a = run({"verify-tables", "dim3"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  auto b = run({"verify-tables", "dim5", "--json"});
  CHECK(b.code == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks").size() == 8);  // seven shapes plus the enumeration check
  CHECK(run({"verify-tables", "dim9"}).code == 3);
}

TEST_CASE("expected data is consistent with itself") {
  std::size_t n = 0;
  for (const auto& row : table_rows(7)) {
    n += row.shapes.size();
    std::size_t sum = 0;
    for (auto d : row.dims) sum += d;
    CHECK(sum == 49);
  }
  CHECK(n == 31);
  for (const auto* cases : {&corollary_cases(), &table12_cases()}) {
    for (const auto& pc : *cases) CHECK(pretty(pc.expected, pc.var) == pc.expected_text);
  }
}

TEST_CASE("sweep") {
  TempDir tmp;
  const auto out1 = (tmp.path / "d1").string();
  auto a = run({"sweep", "--dim", "1", "--nmax", "4", "--jobs", "2", "--out", out1, "--cache",
                (tmp.path / "cache").string()});
  CHECK(a.code == 0);
  const auto s1 = nlohmann::json::parse(std::ifstream(tmp.path / "d1" / "summary.json"));
  CHECK(s1.at("rows").size() == 1);
  CHECK(s1.at("rows")[0].at("fit") == "1");
  CHECK(fs::exists(tmp.path / "d1" / "summary.txt"));

  const auto out3 = (tmp.path / "d3").string();
  auto b = run({"sweep", "--dim", "3", "--nmax", "6", "--jobs", "2", "--out", out3, "--json", "--cache",
                (tmp.path / "cache").string()});
  CHECK(b.code == 0);
  const auto s3 = nlohmann::json::parse(b.out);
  REQUIRE(s3.at("rows").size() == 2);
  for (const auto& row : s3.at("rows")) {
    CHECK(row.at("status") == "ok");
    CHECK(row.at("all_flags_hold") == true);
  }
  CHECK(run({"sweep", "--dim", "4", "--out", out3}).code == 3);
}
