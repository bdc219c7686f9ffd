#include "tmdiff/limits.hpp"

#include <cstdlib>

namespace tmdiff {
namespace {

template <typename T>
void override_from_env(const char *name, T &target) {
  const char *raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char *end = nullptr;
  const long long parsed = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed <= 0) {
    throw std::invalid_argument(std::string("invalid value for ") + name + ": " + raw);
  }
  target = static_cast<T>(parsed);
}

}  // namespace

ResourceCaps ResourceCaps::from_environment() {
  ResourceCaps caps;
  override_from_env("TMDIFF_CAP_TRUNCATION", caps.max_truncation);
  override_from_env("TMDIFF_CAP_LEVEL", caps.max_level);
  override_from_env("TMDIFF_CAP_WORD", caps.max_word_length);
  override_from_env("TMDIFF_CAP_GRID", caps.max_grid_size);
  return caps;
}

const ResourceCaps &default_caps() {
  static const ResourceCaps caps{};
  return caps;
}

void check_cap(std::int64_t value, std::int64_t cap, const std::string &what) {
  if (value > cap) {
    throw ResourceCapError(what + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace tmdiff
