#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace skewtensor::cli {

std::uint64_t fnv1a(const std::string& text);

// One file per record, named by the hash of the key. The payload text is stored
// verbatim so a hit reproduces it byte for byte.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // --cache, then $SKEWTENSOR_CACHE, then ./.skewtensor-cache.
  static std::filesystem::path resolve(const std::optional<std::string>& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path record_path(const std::string& key) const;

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, std::uint64_t seed, const std::string& payload);

 private:
  std::filesystem::path dir_;
  mutable std::mutex writer_;
};

}  // namespace skewtensor::cli
