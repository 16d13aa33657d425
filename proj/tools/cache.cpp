#include "cache.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skewtensor/serialize.hpp"

namespace skewtensor::cli {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::resolve(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("SKEWTENSOR_CACHE"); env && *env) return env;
  return ".skewtensor-cache";
}

fs::path ResultCache::record_path(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(record_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto record = nlohmann::json::parse(buf.str());
    // A hash collision or an older schema is treated as a miss.
    if (record.at("key").get<std::string>() != key) return std::nullopt;
    if (record.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    return record.at("payload").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, std::uint64_t seed, const std::string& payload) {
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch());
  const nlohmann::json record = {{"key", key},
                                 {"seed", seed},
                                 {"schema_version", kSchemaVersion},
                                 {"timestamp", now.count()},
                                 {"payload", payload}};
  std::lock_guard lock(writer_);
  fs::create_directories(dir_);
  const fs::path target = record_path(key);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << record.dump();
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace skewtensor::cli
