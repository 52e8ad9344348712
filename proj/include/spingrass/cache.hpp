#pragma once

// Advisory on-disk cache for CLI payloads.  One JSON record per key with a
// crc32 over the payload; anything unreadable counts as a miss.

#include <json.hpp>

#include <boost/crc.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace spingrass {

inline constexpr int kCacheVersion = 1;

inline std::uint32_t crc32_of(const std::string& s) {
  boost::crc_32_type crc;
  crc.process_bytes(s.data(), s.size());
  return crc.checksum();
}

class Cache {
public:
  Cache() = default;
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// SPINGRASS_CACHE_DIR, else $XDG_CACHE_HOME/spingrass, else
  /// ~/.cache/spingrass.  Disabled when enabled is false or no location
  /// can be determined.
  static Cache from_environment(bool enabled = true) {
    if (!enabled) return Cache();
    if (const char* d = std::getenv("SPINGRASS_CACHE_DIR"); d && *d) return Cache(d);
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return Cache(std::filesystem::path(x) / "spingrass");
    if (const char* h = std::getenv("HOME"); h && *h) return Cache(std::filesystem::path(h) / ".cache" / "spingrass");
    return Cache();
  }

  bool enabled() const { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  std::optional<nlohmann::json> load(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
      const auto rec = nlohmann::json::parse(in);
      if (rec.at("version").get<int>() != kCacheVersion || rec.at("key").get<std::string>() != key) return std::nullopt;
      const auto& payload = rec.at("payload");
      if (rec.at("crc32").get<std::uint32_t>() != crc32_of(payload.dump())) return std::nullopt;
      return payload;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  /// Write-temp-then-rename; failures are silently ignored.
  void store(const std::string& key, const nlohmann::json& payload) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) return;
    const nlohmann::json rec = {
        {"version", kCacheVersion}, {"key", key}, {"payload", payload}, {"crc32", crc32_of(payload.dump())}};
    const auto target = path_for(key);
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      out << rec.dump();
      if (!out) {
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::filesystem::path path_for(const std::string& key) const {
    std::string name;
    for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
    std::ostringstream suffix;
    suffix << std::hex << crc32_of(key);
    return *dir_ / (name + "-" + suffix.str() + ".json");
  }

private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace spingrass
