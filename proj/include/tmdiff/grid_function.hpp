#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tmdiff/distribution.hpp"

namespace tmdiff {

// Function sampled at x_j = j / grid_size, j = 0..grid_size.
class GridFunction {
 public:
  GridFunction(std::int64_t grid_size, std::vector<double> values);

  static GridFunction sample(std::int64_t grid_size, const std::function<double(double)> &fn);
  static GridFunction sample(const FourierDistribution &dist, std::int64_t grid_size);

  std::int64_t grid_size() const { return grid_size_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::int64_t j) const { return values_[static_cast<std::size_t>(j)]; }
  double x(std::int64_t j) const { return static_cast<double>(j) / static_cast<double>(grid_size_); }

 private:
  std::int64_t grid_size_;
  std::vector<double> values_;
};

// Checks that g samples a member of D: g(0) = 0, non-decreasing and
// g(x) + g(1-x) = 1, each up to `tolerance`. Throws std::invalid_argument.
void require_distribution_member(const GridFunction &g, double tolerance);

// Fixed-point map on a sampled distribution: for x_j <= 1/2
//   (Phi G)(x_j) = 1/2 sum_{i < 2j} (1 - cos(pi y_i)) (G(x_{i+1}) - G(x_i)),
// y_i the interval midpoint, and (Phi G)(x) = 1 - (Phi G)(1-x) above 1/2.
// The grid size must be even.
GridFunction apply_phi(const GridFunction &g, double tolerance = 1e-9);

// sum_j |(G-H)(x_{j+1}) - (G-H)(x_j)|, a lower bound on V(G - H).
double total_variation_distance(const GridFunction &g, const GridFunction &h);

double sup_distance(const GridFunction &g, const GridFunction &h);

}  // namespace tmdiff
