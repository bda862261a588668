#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <system_error>

#include "gamma0/registry.hpp"
#include "gamma0/serialize.hpp"

namespace gamma0 {

/// Memory cache backed by one JSON file per level in `dir`.
///
/// Files that fail to parse or disagree with their own Farey symbol are rebuilt.
/// Writes go to a temporary file that is renamed into place, so concurrent readers
/// see either the old or the new whole file.
class DiskGeneratorCache : public MemoryGeneratorCache {
 public:
  explicit DiskGeneratorCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::filesystem::path path_for(std::int64_t level) const {
    return dir_ / ("gamma0_" + std::to_string(level) + ".json");
  }

  /// --cache-dir if given, else $GAMMA0_CACHE_DIR, else nothing.
  static std::optional<std::filesystem::path> resolve_dir(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("GAMMA0_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }

 protected:
  std::shared_ptr<const GeneratorSet> load_or_build(std::int64_t level) override {
    const auto path = path_for(level);
    if (std::ifstream in(path); in) {
      try {
        return std::make_shared<const GeneratorSet>(generator_set_from_json(Json::parse(in)));
      } catch (const std::exception&) {
        // fall through and rebuild
      }
    }
    auto gs = MemoryGeneratorCache::load_or_build(level);
    store(path, to_json(*gs).dump());
    return gs;
  }

 private:
  static void store(const std::filesystem::path& path, const std::string& text) {
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << text << '\n';
      if (!out) return;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::filesystem::path dir_;
};

}  // namespace gamma0
