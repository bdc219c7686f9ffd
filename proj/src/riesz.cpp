#include "tmdiff/riesz.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tmdiff {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGaussPoints = 20;

// Phase of sin/cos(2^k pi x), reduced to [0, 2) in units of pi.
double reduced_phase(double x, int k) { return std::fmod(std::ldexp(x, k), 2.0); }

struct GaussLegendre {
  std::array<double, kGaussPoints> nodes{};
  std::array<double, kGaussPoints> weights{};

  GaussLegendre() {
    constexpr int n = kGaussPoints;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double derivative = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
        }
        derivative = n * (z * p0 - p1) / (z * z - 1.0);
        const double step = p0 / derivative;
        z -= step;
        if (std::abs(step) < 1e-16) break;
      }
      nodes[i] = -z;
      nodes[n - 1 - i] = z;
      weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * derivative * derivative);
    }
  }
};

const GaussLegendre &gauss_rule() {
  static const GaussLegendre rule;
  return rule;
}

double sine_product(int level, double x) {
  double product = 1.0;
  for (int l = 0; l < level; ++l) {
    const double s = std::sin(kPi * reduced_phase(x, l));
    product *= 2.0 * s * s;
  }
  return product;
}

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("Riesz density argument outside [0,1]");
}

}  // namespace

RieszDensity::RieszDensity(int level) : level_(level) {
  if (level < 0) throw std::invalid_argument("Riesz level must be >= 0");
  if (level > 1000) throw std::invalid_argument("Riesz level too large");
}

double RieszDensity::periodic(double x) const {
  double product = 1.0;
  for (int l = 0; l < level_; ++l) product *= 1.0 - std::cos(kPi * reduced_phase(x, l + 1));
  return product;
}

double RieszDensity::operator()(double x) const {
  check_unit_interval(x);
  return periodic(x);
}

double RieszDensity::sine_form(double x) const {
  check_unit_interval(x);
  return sine_product(level_, x);
}

double RieszDensity::integrate_simpson(std::int64_t intervals) const {
  if (intervals < 2 || intervals % 2 != 0) throw std::invalid_argument("Simpson rule needs an even interval count");
  const double h = 1.0 / static_cast<double>(intervals);
  double odd = 0.0, even = 0.0;
  for (std::int64_t j = 1; j < intervals; ++j) {
    const double value = periodic(static_cast<double>(j) * h);
    (j % 2 == 1 ? odd : even) += value;
  }
  return h / 3.0 * (periodic(0.0) + 4.0 * odd + 2.0 * even + periodic(1.0));
}

double RieszDensity::integrate(double a, double b) const {
  check_unit_interval(a);
  check_unit_interval(b);
  if (b < a) throw std::invalid_argument("integration bounds reversed");
  if (a == b) return 0.0;

  const auto &rule = gauss_rule();
  const double max_width = std::ldexp(1.0, -(level_ + 1));
  const auto panels = static_cast<std::int64_t>(std::ceil((b - a) / max_width));
  const double width = (b - a) / static_cast<double>(panels);

  double total = 0.0;
  for (std::int64_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * width;
    double panel = 0.0;
    for (int i = 0; i < kGaussPoints; ++i) {
      panel += rule.weights[i] * sine_product(level_, mid + 0.5 * width * rule.nodes[i]);
    }
    total += 0.5 * width * panel;
  }
  return total;
}

double riesz_density(int level, double x) { return RieszDensity(level)(x); }

double riesz_density_sine_form(int level, double x) { return RieszDensity(level).sine_form(x); }

}  // namespace tmdiff
