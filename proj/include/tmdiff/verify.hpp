#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tmdiff/limits.hpp"

namespace tmdiff {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::int64_t truncation = 4096;
  int level = 20;
  std::int64_t word_length = 1 << 16;
  std::int64_t grid_size = 4096;
};

// Invariant and cross-route checks over every computation route.
std::vector<CheckResult> run_verification(const VerifyOptions &options,
                                          const ResourceCaps &caps = default_caps());

nlohmann::ordered_json verification_json(const std::vector<CheckResult> &results);
std::string verification_text(const std::vector<CheckResult> &results);

}  // namespace tmdiff
