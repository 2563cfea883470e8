#pragma once

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ddseries::store {

std::string sha256_hex(std::string_view bytes);
// Digest of a file's bytes; throws PreconditionError if unreadable.
std::string file_digest(const std::filesystem::path& path);

// Writes bytes to path via a temporary file in the same directory and a rename.
void atomic_write(const std::filesystem::path& path, std::string_view bytes);

// Content-addressed JSON store: the blob for key K lives at
// <dir>/<sha256(K.dump())>.json and holds {"tool_version", "key", "value"}.
class Cache {
 public:
  using Validator = std::function<void(const nlohmann::json&)>;  // throws on schema mismatch

  Cache(std::filesystem::path dir, std::string tool_version, std::ostream* warnings = nullptr);

  std::filesystem::path path_for(const nlohmann::json& key) const;

  // nullopt on a miss. A blob that fails to parse, has another tool version,
  // another key, or fails the validator is reported on the warning stream
  // and treated as a miss.
  std::optional<nlohmann::json> lookup(const nlohmann::json& key, const Validator& validate = {}) const;
  void store(const nlohmann::json& key, const nlohmann::json& value) const;

  // lookup, else compute + store.
  nlohmann::json get_or_compute(const nlohmann::json& key, const std::function<nlohmann::json()>& compute,
                                const Validator& validate = {}) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  void warn(const std::string& message) const;
  std::filesystem::path dir_;
  std::string tool_version_;
  std::ostream* warnings_;
};

struct RunManifest {
  std::string subcommand;
  nlohmann::json parameters = nlohmann::json::object();
  std::map<std::string, std::string> input_digests;  // path -> sha256
  std::string tool_version;
  double wall_time_seconds = 0;
  std::string output_digest;

  // sha256 over everything that determines the output: subcommand,
  // parameters, input digests, tool version. Wall time and the output
  // digest are excluded.
  std::string digest() const;
  nlohmann::json to_json() const;
};

}  // namespace ddseries::store
