#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tmdiff/autocorrelation.hpp"
#include "tmdiff/distribution.hpp"
#include "tmdiff/grid_function.hpp"
#include "tmdiff/periodogram.hpp"

namespace tmdiff {

enum class PrecisionMode { Exact, Float };

// Fixed 17-significant-digit rendering used by every text export.
std::string format_double(double v);

// m,numerator,denominator,value (exact) or m,value (float).
void write_eta_csv(std::ostream &out, const EtaTable &table, PrecisionMode mode);
nlohmann::ordered_json eta_json(const EtaTable &table, PrecisionMode mode);

// Coefficient dump c_1..c_M in the same layout.
void write_coefficients_csv(std::ostream &out, const ExactCoefficients &coefficients, PrecisionMode mode);
nlohmann::ordered_json coefficients_json(const ExactCoefficients &coefficients, PrecisionMode mode);

// x,value rows for a sampled function.
void write_samples_csv(std::ostream &out, const GridFunction &samples);
nlohmann::ordered_json samples_json(const GridFunction &samples, const std::string &label);

void write_periodogram_csv(std::ostream &out, const Periodogram &p);

// N,sigma_numerator,sigma_denominator,average rows followed by the fit.
void write_wiener_csv(std::ostream &out, const DecayFit &fit);
nlohmann::ordered_json wiener_json(const DecayFit &fit);

struct SvgOptions {
  int width = 640;
  int height = 480;
  int margin = 56;
  std::size_t max_segments = 8192;
  std::string title = "F(x)";
};

// Line plot of a sampled distribution function on the unit square with
// ticks at 0, 1/4, 1/2, 3/4, 1 on both axes. The polyline is decimated to
// at most max_segments segments, always keeping both endpoints and x = 1/2.
std::string render_distribution_svg(const GridFunction &samples, const SvgOptions &options = {});

// Data points of the rendered polyline, in unit-square coordinates.
std::vector<std::pair<double, double>> decimated_points(const GridFunction &samples, std::size_t max_segments);

}  // namespace tmdiff
