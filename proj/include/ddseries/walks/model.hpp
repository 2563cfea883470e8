#pragma once

#include <optional>
#include <string>

namespace ddseries::walks {

enum class ModelKind { Saw, Memory, Simple };

// Which revisits are forbidden: all (saw), the last tau sites (memory), or
// none (simple).
struct WalkModel {
  ModelKind kind = ModelKind::Saw;
  int tau = 0;  // used only by Memory

  static WalkModel saw() { return {ModelKind::Saw, 0}; }
  static WalkModel memory(int tau);
  static WalkModel simple() { return {ModelKind::Simple, 0}; }

  // "saw", "memory", "simple"
  std::string name() const;
  // "saw", "memory-4", "simple"
  std::string label() const;
  // tau for memory walks, nullopt ("inf") for saw, 0 for simple.
  std::optional<int> memory_length() const;

  friend bool operator==(const WalkModel&, const WalkModel&) = default;
};

WalkModel parse_model(const std::string& name, std::optional<int> tau);

}  // namespace ddseries::walks
