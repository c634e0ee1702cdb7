#include "boyd14/pipeline/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace boyd14::pipeline {

namespace fs = std::filesystem;

Cache::Cache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::optional<Cache> Cache::from_env() {
  const char* d = std::getenv("BOYD14_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return Cache(d);
}

fs::path Cache::file_for(const std::string& key) const {
  std::string name;
  for (char c : key) name += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
  if (name.size() > 120) {
    // FNV-1a keeps long keys (divisors over number fields) under NAME_MAX.
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    name = name.substr(0, 100) + "-" + hex;
  }
  return dir_ / (name + ".json");
}

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
  std::ifstream in(file_for(key));
  if (!in) return std::nullopt;
  auto j = nlohmann::json::parse(in, nullptr, false);
  // Entries carry their key; a sanitization collision reads as a miss.
  if (j.is_discarded() || !j.contains("key") || j["key"] != key) return std::nullopt;
  return j["value"];
}

void Cache::put(const std::string& key, const nlohmann::json& value) const {
  fs::path f = file_for(key);
  fs::path tmp = f;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"key", key}, {"value", value}}.dump(1) << "\n";
  }
  fs::rename(tmp, f);
}

}  // namespace boyd14::pipeline
