#pragma once

#include <cstdint>

namespace tmdiff {

// Level-n Riesz product density
//
//   f_n(x) = prod_{l=0}^{n-1} (1 - cos(2^{l+1} pi x)) = 2^n prod_{l=0}^{n-1} sin^2(2^l pi x),
//
// the density of the n-th Volterra iterate F_n. Both forms are available;
// each factor's phase is reduced exactly (scaling by 2^l and fmod are
// exact in binary floating point) before the trigonometric call.
class RieszDensity {
 public:
  explicit RieszDensity(int level);

  int level() const { return level_; }

  // Product of (1 - cos) factors. x must lie in [0,1].
  double operator()(double x) const;
  double sine_form(double x) const;

  // Same product without the domain check; the factors are 1-periodic.
  double periodic(double x) const;

  // Composite Simpson rule over [0,1] with the given even number of intervals.
  double integrate_simpson(std::int64_t intervals) const;

  // Integral over [a,b] with composite Gauss-Legendre panels no wider than
  // the shortest period of the product. The integrand is non-negative, so
  // the result carries relative (not absolute) accuracy even when tiny.
  double integrate(double a, double b) const;

 private:
  int level_;
};

double riesz_density(int level, double x);
double riesz_density_sine_form(int level, double x);

}  // namespace tmdiff
