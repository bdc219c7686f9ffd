#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmdiff {

// Raised when a request exceeds one of the configured resource caps.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResourceCaps {
  std::int64_t max_truncation = std::int64_t{1} << 20;  // Fourier order M
  int max_level = 24;                                   // Volterra level n
  std::int64_t max_word_length = std::int64_t{1} << 24;
  std::int64_t max_grid_size = std::int64_t{1} << 22;

  // Defaults overridden by TMDIFF_CAP_TRUNCATION, TMDIFF_CAP_LEVEL,
  // TMDIFF_CAP_WORD and TMDIFF_CAP_GRID when set.
  static ResourceCaps from_environment();
};

const ResourceCaps &default_caps();

void check_cap(std::int64_t value, std::int64_t cap, const std::string &what);

}  // namespace tmdiff
