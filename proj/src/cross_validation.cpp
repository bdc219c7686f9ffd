#include "tmdiff/cross_validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tmdiff/autocorrelation.hpp"
#include "tmdiff/distribution.hpp"
#include "tmdiff/fft.hpp"
#include "tmdiff/grid_function.hpp"
#include "tmdiff/periodogram.hpp"
#include "tmdiff/probes.hpp"

namespace tmdiff {
namespace {

double symmetry_defect(const GridFunction &g) {
  double worst = 0.0;
  const std::int64_t n = g.grid_size();
  for (std::int64_t j = 0; j <= n; ++j) worst = std::max(worst, std::abs(g[j] + g[n - j] - 1.0));
  return worst;
}

double quadrature_residual(const GridFunction &g) {
  const GridFunction image = apply_phi(g, 1e-6);
  double worst = 0.0;
  for (std::int64_t j = 0; 2 * j <= g.grid_size(); ++j) worst = std::max(worst, std::abs(image[j] - g[j]));
  return worst;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

CrossValidationReport cross_validate(const CrossValidationConfig &config, const ResourceCaps &caps) {
  check_cap(config.truncation, caps.max_truncation, "truncation order");
  check_cap(config.grid_size, caps.max_grid_size, "grid size");
  if (config.grid_size < 2 || config.grid_size % 2 != 0) throw std::invalid_argument("grid size must be even and >= 2");
  if (config.oversampling < 1 || !is_power_of_two(static_cast<std::uint64_t>(config.oversampling))) {
    throw std::invalid_argument("oversampling must be a power of two");
  }

  CrossValidationReport report;
  report.config = config;

  const FourierDistribution fourier = fourier_distribution(config.truncation, EtaTable(config.truncation));
  const FourierDistribution volterra = volterra_distribution(config.level, caps);
  const auto fourier_grid = GridFunction::sample(fourier, config.grid_size);
  const auto volterra_grid = GridFunction::sample(volterra, config.grid_size);

  std::int64_t p_grid = config.word_length * config.oversampling;
  while (p_grid < config.grid_size) p_grid *= 2;
  report.periodogram_grid = p_grid;
  const EmpiricalDistribution empirical(periodogram(config.word_length, p_grid, caps));
  const auto empirical_grid = GridFunction::sample(config.grid_size, [&](double x) { return empirical(x); });

  report.fourier_vs_volterra = sup_distance(fourier_grid, volterra_grid);
  report.fourier_vs_empirical = sup_distance(fourier_grid, empirical_grid);
  report.volterra_vs_empirical = sup_distance(volterra_grid, empirical_grid);

  report.fourier_residual = functional_equation_residual(fourier, config.grid_size);
  report.volterra_residual = functional_equation_residual(volterra, config.grid_size);
  report.empirical_residual = quadrature_residual(empirical_grid);

  report.fourier_symmetry = symmetry_defect(fourier_grid);
  report.volterra_symmetry = symmetry_defect(volterra_grid);
  report.empirical_symmetry = symmetry_defect(empirical_grid);
  return report;
}

nlohmann::ordered_json CrossValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = {{"truncation", config.truncation},
                 {"level", config.level},
                 {"word_length", config.word_length},
                 {"grid_size", config.grid_size},
                 {"periodogram_grid", periodogram_grid}};
  j["sup_distance"] = {{"fourier_vs_volterra", fourier_vs_volterra},
                       {"fourier_vs_empirical", fourier_vs_empirical},
                       {"volterra_vs_empirical", volterra_vs_empirical}};
  j["residual"] = {{"fourier", fourier_residual},
                   {"volterra", volterra_residual},
                   {"empirical", empirical_residual},
                   {"empirical_method", "quadrature"}};
  j["symmetry_defect"] = {{"fourier", fourier_symmetry},
                          {"volterra", volterra_symmetry},
                          {"empirical", empirical_symmetry}};
  return j;
}

std::string CrossValidationReport::to_text() const {
  std::string out;
  out += "routes: fourier M=" + std::to_string(config.truncation) + ", volterra n=" +
         std::to_string(config.level) + ", periodogram N=" + std::to_string(config.word_length) +
         " (frequency grid " + std::to_string(periodogram_grid) + "), comparison grid " +
         std::to_string(config.grid_size) + "\n";
  out += "sup |fourier - volterra|    " + format_number(fourier_vs_volterra) + "\n";
  out += "sup |fourier - empirical|   " + format_number(fourier_vs_empirical) + "\n";
  out += "sup |volterra - empirical|  " + format_number(volterra_vs_empirical) + "\n";
  out += "residual fourier            " + format_number(fourier_residual) + "\n";
  out += "residual volterra           " + format_number(volterra_residual) + "\n";
  out += "residual empirical (quad)   " + format_number(empirical_residual) + "\n";
  out += "symmetry defect f/v/e       " + format_number(fourier_symmetry) + " " +
         format_number(volterra_symmetry) + " " + format_number(empirical_symmetry) + "\n";
  return out;
}

}  // namespace tmdiff
