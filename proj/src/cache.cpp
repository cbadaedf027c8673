#include "abelcycles/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>
#include <openssl/evp.h>

namespace abelcycles {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_))
    throw std::runtime_error("cannot create cache directory " + dir_.string());
}

std::filesystem::path ResultCache::entry_path(const std::string &key) const {
  return dir_ / (sha256_hex(key) + ".json");
}

std::optional<std::string> ResultCache::get(const std::string &key) const {
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in)
    return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object())
    return std::nullopt;
  auto key_it = j.find("key");
  auto sum_it = j.find("sha256");
  auto payload_it = j.find("payload");
  if (key_it == j.end() || sum_it == j.end() || payload_it == j.end() || !key_it->is_string() ||
      !sum_it->is_string() || !payload_it->is_string())
    return std::nullopt;
  std::string payload = payload_it->get<std::string>();
  if (key_it->get<std::string>() != key || sum_it->get<std::string>() != sha256_hex(payload))
    return std::nullopt;
  return payload;
}

void ResultCache::put(const std::string &key, const std::string &payload) const {
  nlohmann::json j;
  j["key"] = key;
  j["sha256"] = sha256_hex(payload);
  j["payload"] = payload;
  const auto target = entry_path(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cache directory not writable: " + dir_.string());
    out << j.dump();
    if (!out)
      throw std::runtime_error("failed writing cache entry " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec)
    throw std::runtime_error("failed to install cache entry " + target.string());
}

} // namespace abelcycles
