#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "tmdiff/limits.hpp"

namespace tmdiff {

struct CrossValidationConfig {
  std::int64_t truncation = 4096;       // Fourier order M
  int level = 16;                       // Volterra level n
  std::int64_t word_length = 1 << 16;   // periodogram prefix N
  std::int64_t grid_size = 4096;        // common comparison grid
  // Frequency oversampling of the periodogram relative to the word length.
  std::int64_t oversampling = 4;
};

struct CrossValidationReport {
  CrossValidationConfig config;
  std::int64_t periodogram_grid = 0;

  double fourier_vs_volterra = 0.0;
  double fourier_vs_empirical = 0.0;
  double volterra_vs_empirical = 0.0;

  // Closed-form residuals for the two sine-series routes; the empirical
  // route has no series, so its residual uses the quadrature map.
  double fourier_residual = 0.0;
  double volterra_residual = 0.0;
  double empirical_residual = 0.0;

  double fourier_symmetry = 0.0;
  double volterra_symmetry = 0.0;
  double empirical_symmetry = 0.0;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

CrossValidationReport cross_validate(const CrossValidationConfig &config,
                                     const ResourceCaps &caps = default_caps());

}  // namespace tmdiff
