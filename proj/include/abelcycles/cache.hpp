#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace abelcycles {

/// Environment variable naming the default cache directory.
inline constexpr const char *cache_env_var = "ABELCYCLES_CACHE";

std::string sha256_hex(std::string_view data);

/// Content-addressed result store. Each entry lives in <dir>/<sha256(key)>.json
/// together with the key and a checksum of the payload; unreadable,
/// mismatched or corrupted entries are reported as misses.
class ResultCache {
public:
  /// Creates the directory if needed; throws std::runtime_error when it
  /// cannot be created.
  explicit ResultCache(std::filesystem::path dir);

  std::optional<std::string> get(const std::string &key) const;
  /// Atomic replace via a temporary file; throws std::runtime_error when the
  /// directory is not writable.
  void put(const std::string &key, const std::string &payload) const;

  std::filesystem::path entry_path(const std::string &key) const;
  const std::filesystem::path &dir() const { return dir_; }

private:
  std::filesystem::path dir_;
};

} // namespace abelcycles
