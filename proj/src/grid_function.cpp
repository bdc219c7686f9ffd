#include "tmdiff/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tmdiff {
namespace {

void require_same_grid(const GridFunction &g, const GridFunction &h) {
  if (g.grid_size() != h.grid_size()) throw std::invalid_argument("grid functions live on different grids");
}

}  // namespace

GridFunction::GridFunction(std::int64_t grid_size, std::vector<double> values)
    : grid_size_(grid_size), values_(std::move(values)) {
  if (grid_size_ < 2) throw std::invalid_argument("grid size must be >= 2");
  if (static_cast<std::int64_t>(values_.size()) != grid_size_ + 1) {
    throw std::invalid_argument("grid function needs grid_size + 1 values");
  }
  for (const double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("grid function values must be finite");
  }
}

GridFunction GridFunction::sample(std::int64_t grid_size, const std::function<double(double)> &fn) {
  if (grid_size < 2) throw std::invalid_argument("grid size must be >= 2");
  std::vector<double> values(static_cast<std::size_t>(grid_size) + 1);
  for (std::int64_t j = 0; j <= grid_size; ++j) {
    values[static_cast<std::size_t>(j)] = fn(static_cast<double>(j) / static_cast<double>(grid_size));
  }
  return GridFunction(grid_size, std::move(values));
}

GridFunction GridFunction::sample(const FourierDistribution &dist, std::int64_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid size must be >= 2");
  return GridFunction(grid_size, evaluate_grid(dist, grid_size));
}

void require_distribution_member(const GridFunction &g, double tolerance) {
  const std::int64_t n = g.grid_size();
  if (std::abs(g[0]) > tolerance) throw std::invalid_argument("distribution must vanish at 0");
  for (std::int64_t j = 0; j < n; ++j) {
    if (g[j + 1] - g[j] < -tolerance) {
      throw std::invalid_argument("distribution decreases at grid index " + std::to_string(j));
    }
  }
  for (std::int64_t j = 0; j <= n; ++j) {
    if (std::abs(g[j] + g[n - j] - 1.0) > tolerance) {
      throw std::invalid_argument("distribution violates G(x) + G(1-x) = 1 at grid index " + std::to_string(j));
    }
  }
}

GridFunction apply_phi(const GridFunction &g, double tolerance) {
  const std::int64_t n = g.grid_size();
  if (n % 2 != 0) throw std::invalid_argument("fixed-point map needs an even grid size");
  require_distribution_member(g, tolerance);

  const double h = 1.0 / static_cast<double>(n);
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  double running = 0.0;
  out[0] = 0.0;
  for (std::int64_t j = 1; j <= n / 2; ++j) {
    for (std::int64_t i = 2 * j - 2; i < 2 * j; ++i) {
      const double mid = (static_cast<double>(i) + 0.5) * h;
      running += 0.5 * (1.0 - std::cos(std::numbers::pi * mid)) * (g[i + 1] - g[i]);
    }
    out[static_cast<std::size_t>(j)] = running;
  }
  for (std::int64_t j = n / 2 + 1; j <= n; ++j) {
    out[static_cast<std::size_t>(j)] = 1.0 - out[static_cast<std::size_t>(n - j)];
  }
  return GridFunction(n, std::move(out));
}

double total_variation_distance(const GridFunction &g, const GridFunction &h) {
  require_same_grid(g, h);
  double total = 0.0;
  for (std::int64_t j = 0; j < g.grid_size(); ++j) {
    total += std::abs((g[j + 1] - h[j + 1]) - (g[j] - h[j]));
  }
  return total;
}

double sup_distance(const GridFunction &g, const GridFunction &h) {
  require_same_grid(g, h);
  double worst = 0.0;
  for (std::int64_t j = 0; j <= g.grid_size(); ++j) worst = std::max(worst, std::abs(g[j] - h[j]));
  return worst;
}

}  // namespace tmdiff
