#include "ddseries/walks/model.hpp"

#include "ddseries/error.hpp"

namespace ddseries::walks {

WalkModel WalkModel::memory(int tau) {
  if (tau < 0) throw PreconditionError("memory length tau must be non-negative");
  return {ModelKind::Memory, tau};
}

std::string WalkModel::name() const {
  switch (kind) {
    case ModelKind::Saw:
      return "saw";
    case ModelKind::Memory:
      return "memory";
    case ModelKind::Simple:
      return "simple";
  }
  return "unknown";
}

std::string WalkModel::label() const {
  return kind == ModelKind::Memory ? "memory-" + std::to_string(tau) : name();
}

std::optional<int> WalkModel::memory_length() const {
  switch (kind) {
    case ModelKind::Saw:
      return std::nullopt;
    case ModelKind::Memory:
      return tau;
    case ModelKind::Simple:
      return 0;
  }
  return 0;
}

WalkModel parse_model(const std::string& name, std::optional<int> tau) {
  if (name == "saw") return WalkModel::saw();
  if (name == "simple") return WalkModel::simple();
  if (name == "memory") {
    if (!tau) throw PreconditionError("memory model needs a tau");
    return WalkModel::memory(*tau);
  }
  throw PreconditionError("unknown walk model '" + name + "' (expected saw, memory or simple)");
}

}  // namespace ddseries::walks
