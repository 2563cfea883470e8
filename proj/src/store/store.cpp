#include "ddseries/store/store.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <unistd.h>

#include "ddseries/error.hpp"

namespace ddseries::store {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string file_digest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return sha256_hex(buffer.str());
}

void atomic_write(const fs::path& path, std::string_view bytes) {
  static std::atomic<unsigned> counter{0};
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

Cache::Cache(fs::path dir, std::string tool_version, std::ostream* warnings)
    : dir_(std::move(dir)), tool_version_(std::move(tool_version)), warnings_(warnings) {}

fs::path Cache::path_for(const nlohmann::json& key) const { return dir_ / (sha256_hex(key.dump()) + ".json"); }

void Cache::warn(const std::string& message) const {
  if (warnings_) *warnings_ << "warning: " << message << "\n";
}

std::optional<nlohmann::json> Cache::lookup(const nlohmann::json& key, const Validator& validate) const {
  const auto path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json blob;
  try {
    in >> blob;
  } catch (const nlohmann::json::exception&) {
    warn("ignoring corrupt cache entry " + path.string());
    return std::nullopt;
  }
  if (!blob.is_object() || !blob.contains("tool_version") || !blob.contains("key") || !blob.contains("value")) {
    warn("ignoring malformed cache entry " + path.string());
    return std::nullopt;
  }
  if (blob.at("tool_version") != tool_version_) {
    warn("ignoring cache entry " + path.string() + " from tool version " + blob.at("tool_version").dump());
    return std::nullopt;
  }
  if (blob.at("key") != key) {
    warn("ignoring cache entry " + path.string() + " with a mismatched key");
    return std::nullopt;
  }
  if (validate) {
    try {
      validate(blob.at("value"));
    } catch (const std::exception& e) {
      warn("ignoring cache entry " + path.string() + " that fails validation: " + e.what());
      return std::nullopt;
    }
  }
  return blob.at("value");
}

void Cache::store(const nlohmann::json& key, const nlohmann::json& value) const {
  const nlohmann::json blob = {{"tool_version", tool_version_}, {"key", key}, {"value", value}};
  atomic_write(path_for(key), blob.dump());
}

nlohmann::json Cache::get_or_compute(const nlohmann::json& key, const std::function<nlohmann::json()>& compute,
                                    const Validator& validate) const {
  if (auto hit = lookup(key, validate)) return *hit;
  auto value = compute();
  store(key, value);
  return value;
}

std::string RunManifest::digest() const {
  const nlohmann::json determining = {{"subcommand", subcommand},
                                      {"parameters", parameters},
                                      {"input_digests", input_digests},
                                      {"tool_version", tool_version}};
  return sha256_hex(determining.dump());
}

nlohmann::json RunManifest::to_json() const {
  return {{"subcommand", subcommand},
          {"parameters", parameters},
          {"input_digests", input_digests},
          {"tool_version", tool_version},
          {"wall_time_seconds", wall_time_seconds},
          {"output_digest", output_digest},
          {"manifest_digest", digest()}};
}

}  // namespace ddseries::store
