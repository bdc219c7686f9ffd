#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tmdiff/limits.hpp"

namespace tmdiff {

// I_N(y_j) = |sum_{n<N} v_n exp(-2 pi i n y_j)|^2 / N at y_j = j / grid_size,
// computed from the symbols of the length-N prefix only.
struct Periodogram {
  std::int64_t word_length = 0;
  std::int64_t grid_size = 0;
  std::vector<double> intensities;  // one per frequency j = 0..grid_size-1

  double frequency(std::int64_t j) const { return static_cast<double>(j) / static_cast<double>(grid_size); }
  double mean_intensity() const;
};

// word_length and grid_size must be powers of two with grid_size >= word_length;
// the prefix is zero-padded to the grid size before the transform.
Periodogram periodogram(std::int64_t word_length, std::int64_t grid_size,
                        const ResourceCaps &caps = default_caps());

// Cumulative periodogram normalized to total mass 1: trapezoidal
// accumulation of the intensities as a density on the frequency grid,
// linearly interpolated between grid frequencies.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(const Periodogram &p);

  // x in [0,1]; throws std::domain_error otherwise.
  double operator()(double x) const;

  std::int64_t grid_size() const { return static_cast<std::int64_t>(cumulative_.size()) - 1; }
  std::span<const double> cumulative() const { return cumulative_; }

 private:
  std::vector<double> cumulative_;  // value at j / grid_size, j = 0..grid_size
};

double empirical_distribution(const Periodogram &p, double x);

}  // namespace tmdiff
