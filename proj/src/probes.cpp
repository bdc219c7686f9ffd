#include "tmdiff/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tmdiff/riesz.hpp"

namespace tmdiff {

double functional_equation_residual(const FourierDistribution &dist, std::int64_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid size must be >= 2");

  const FourierDistribution image = phi_coefficients(dist);
  const auto own = dist.coefficients().numerators();
  const auto mapped = image.coefficients().numerators();

  // image denominator is twice the original one
  std::vector<std::int64_t> difference(mapped.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    const std::int64_t lhs = k < own.size() ? 2 * own[k] : 0;
    difference[k] = lhs - mapped[k];
  }
  const ExactCoefficients exact(std::move(difference), image.coefficients().denominator());
  std::vector<double> weights = exact.to_doubles();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    weights[k] /= static_cast<double>(k + 1) * std::numbers::pi;
  }

  const auto values = sine_series_on_grid(weights, grid_size);
  double worst = 0.0;
  for (std::int64_t j = 0; 2 * j <= grid_size; ++j) {
    worst = std::max(worst, std::abs(values[static_cast<std::size_t>(j)]));
  }
  return worst;
}

double plateau_probe(const FourierDistribution &dist, double center, double halfwidth) {
  if (!(center > 0.0 && center < 1.0)) throw std::domain_error("plateau centre must lie in (0,1)");
  if (!(halfwidth > 0.0 && halfwidth < std::min(center, 1.0 - center))) {
    throw std::domain_error("plateau window must lie inside (0,1)");
  }

  if (dist.label().kind == Construction::Volterra) {
    const RieszDensity density(static_cast<int>(dist.label().order));
    return density.integrate(center - halfwidth, center + halfwidth);
  }

  const auto weights = dist.sine_weights();
  const double pi = std::numbers::pi;
  long double total = 2.0L * halfwidth;
  for (std::size_t k = 1; k <= weights.size(); ++k) {
    const double m = static_cast<double>(k);
    total += 2.0L * weights[k - 1] * std::cos(2.0 * pi * m * center) * std::sin(2.0 * pi * m * halfwidth);
  }
  return static_cast<double>(total);
}

}  // namespace tmdiff
