#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace boyd14::pipeline {

// Flat directory of JSON files, one per (operation, inputs, precision) key.
// Writes go through a temporary file and a rename, so a crashed run never
// leaves a half-written entry.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  // BOYD14_CACHE_DIR, or nullopt when unset or empty.
  static std::optional<Cache> from_env();

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path file_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace boyd14::pipeline
