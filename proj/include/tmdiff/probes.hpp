#pragma once

#include <cstdint>

#include "tmdiff/distribution.hpp"

namespace tmdiff {

/// Largest deviation from the integral equation
///
///   G(x) = 1/2 * integral_0^{2x} (1 - cos(pi y)) dG(y),   0 <= x <= 1/2,
///
/// over the grid points x_j = j / grid_size in [0, 1/2]. The right-hand
/// side is integrated in closed form against the sine series (see
/// phi_coefficients), so the difference is itself an exact sine series and
/// only its evaluation is floating point.
double functional_equation_residual(const FourierDistribution &dist, std::int64_t grid_size);

/// G(x0 + h) - G(x0 - h), the mass G assigns to the window around x0.
///
/// For Volterra iterates the mass is the integral of the non-negative Riesz
/// density over the window, which keeps full relative precision near the
/// near-plateaus where it is far below double spacing around G(x0). Other
/// series use the direct difference 2h + sum 2 c_m/(m pi) cos(2 pi m x0) sin(2 pi m h).
double plateau_probe(const FourierDistribution &dist, double center, double halfwidth);

}  // namespace tmdiff
