#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tmdiff/autocorrelation.hpp"
#include "tmdiff/limits.hpp"
#include "tmdiff/rational.hpp"

namespace tmdiff {

// Exact coefficients c_1..c_M stored as int64 numerators over one shared
// denominator. Every coefficient set produced here (eta values, Volterra
// levels, their images under the fixed-point map) has a denominator of the
// form 3^a 2^b, so the numerators stay small.
class ExactCoefficients {
 public:
  ExactCoefficients() = default;
  // Throws std::overflow_error if a scaled numerator does not fit in int64.
  explicit ExactCoefficients(std::span<const Rational> values);
  ExactCoefficients(std::vector<std::int64_t> numerators, mpz_class denominator);

  std::size_t size() const { return numerators_.size(); }
  bool empty() const { return numerators_.empty(); }

  // c_m for 1 <= m <= size().
  Rational at(std::size_t m) const;
  double value(std::size_t m) const;

  std::span<const std::int64_t> numerators() const { return numerators_; }
  const mpz_class &denominator() const { return denominator_; }

  std::vector<Rational> to_rationals() const;
  std::vector<double> to_doubles() const;

 private:
  std::vector<std::int64_t> numerators_;
  mpz_class denominator_ = 1;
};

enum class Construction { Custom, FourierTruncation, Volterra };

struct DistributionLabel {
  Construction kind = Construction::Custom;
  std::int64_t order = 0;  // M for Fourier truncations, n for Volterra levels
  std::string describe() const;
};

/// Distribution function on [0,1] of the form
///
///   G(x) = x + sum_{m=1}^{M} c_m / (m pi) * sin(2 pi m x)
///
/// with exact coefficients c_m. G(0) = 0, G(1) = 1 and G(x) + G(1-x) = 1
/// hold for every coefficient choice; monotonicity does not.
class FourierDistribution {
 public:
  FourierDistribution() = default;
  explicit FourierDistribution(ExactCoefficients coefficients,
                               DistributionLabel label = {Construction::Custom, 0});

  std::size_t order() const { return exact_.size(); }
  const ExactCoefficients &coefficients() const { return exact_; }
  const DistributionLabel &label() const { return label_; }

  // Sine weights c_m / (m pi), index 0 holding m = 1.
  std::span<const double> sine_weights() const { return weights_; }

  // Density 1 + sum 2 c_m cos(2 pi m x).
  double density(double x) const;

 private:
  ExactCoefficients exact_;
  DistributionLabel label_;
  std::vector<double> weights_;
};

/// Truncated series of the limit distribution: c_m = eta(m) for m = 1..M.
FourierDistribution fourier_distribution(std::int64_t truncation, const EtaTable &eta_source);

/// G(x) for x in [0,1]; throws std::domain_error outside.
double evaluate(const FourierDistribution &dist, double x);

/// floor(x) + G(x - floor(x)) for any real x.
double periodic_extension(const FourierDistribution &dist, double x);

/// G(j / grid_size) for j = 0..grid_size. Coefficients are folded modulo
/// grid_size first, so the cost does not depend on the order M.
std::vector<double> evaluate_grid(const FourierDistribution &dist, std::int64_t grid_size);

/// sum_k weights[k-1] * sin(2 pi k j / grid_size) for j = 0..grid_size.
std::vector<double> sine_series_on_grid(std::span<const double> weights, std::int64_t grid_size);

/// Same for the cosine series sum_k weights[k-1] * cos(2 pi k j / grid_size).
std::vector<double> cosine_series_on_grid(std::span<const double> weights, std::int64_t grid_size);

/// c^(n)_1 .. c^(n)_{2^n - 1} of the n-th iterate of the fixed-point map
/// started from G_0(x) = x. Empty for n = 0.
std::vector<Rational> volterra_coefficients(int level, const ResourceCaps &caps = default_caps());

/// The n-th Volterra iterate F_n as a distribution.
FourierDistribution volterra_distribution(int level, const ResourceCaps &caps = default_caps());

/// Image of a sine-series distribution under the fixed-point map, computed
/// exactly on the coefficients. The result has order 2M + 1 (1 for M = 0).
FourierDistribution phi_coefficients(const FourierDistribution &dist);

}  // namespace tmdiff
