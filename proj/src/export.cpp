#include "tmdiff/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tmdiff {
namespace {

std::string xml_escape(const std::string &text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string format_pixels(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void write_rational_row(std::ostream &out, std::int64_t index, const Rational &value, PrecisionMode mode) {
  out << index << ',';
  if (mode == PrecisionMode::Exact) out << numerator_string(value) << ',' << denominator_string(value) << ',';
  out << format_double(to_double(value)) << '\n';
}

void write_rational_header(std::ostream &out, PrecisionMode mode) {
  out << (mode == PrecisionMode::Exact ? "m,numerator,denominator,value\n" : "m,value\n");
}

nlohmann::ordered_json rational_entry(std::int64_t index, const Rational &value, PrecisionMode mode) {
  nlohmann::ordered_json e;
  e["m"] = index;
  if (mode == PrecisionMode::Exact) {
    e["numerator"] = numerator_string(value);
    e["denominator"] = denominator_string(value);
  }
  e["value"] = to_double(value);
  return e;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_eta_csv(std::ostream &out, const EtaTable &table, PrecisionMode mode) {
  write_rational_header(out, mode);
  for (std::int64_t m = 0; m <= table.max_computed(); ++m) write_rational_row(out, m, table.at(m), mode);
}

nlohmann::ordered_json eta_json(const EtaTable &table, PrecisionMode mode) {
  nlohmann::ordered_json j;
  j["quantity"] = "eta";
  j["max_lag"] = table.max_computed();
  auto &rows = j["values"] = nlohmann::ordered_json::array();
  for (std::int64_t m = 0; m <= table.max_computed(); ++m) rows.push_back(rational_entry(m, table.at(m), mode));
  return j;
}

void write_coefficients_csv(std::ostream &out, const ExactCoefficients &coefficients, PrecisionMode mode) {
  write_rational_header(out, mode);
  for (std::size_t m = 1; m <= coefficients.size(); ++m) {
    write_rational_row(out, static_cast<std::int64_t>(m), coefficients.at(m), mode);
  }
}

nlohmann::ordered_json coefficients_json(const ExactCoefficients &coefficients, PrecisionMode mode) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t m = 1; m <= coefficients.size(); ++m) {
    rows.push_back(rational_entry(static_cast<std::int64_t>(m), coefficients.at(m), mode));
  }
  return rows;
}

void write_samples_csv(std::ostream &out, const GridFunction &samples) {
  out << "x,value\n";
  for (std::int64_t j = 0; j <= samples.grid_size(); ++j) {
    out << format_double(samples.x(j)) << ',' << format_double(samples[j]) << '\n';
  }
}

nlohmann::ordered_json samples_json(const GridFunction &samples, const std::string &label) {
  nlohmann::ordered_json j;
  j["label"] = label;
  j["grid_size"] = samples.grid_size();
  auto &xs = j["x"] = nlohmann::ordered_json::array();
  auto &ys = j["value"] = nlohmann::ordered_json::array();
  for (std::int64_t k = 0; k <= samples.grid_size(); ++k) {
    xs.push_back(samples.x(k));
    ys.push_back(samples[k]);
  }
  return j;
}

void write_periodogram_csv(std::ostream &out, const Periodogram &p) {
  out << "frequency,intensity\n";
  for (std::int64_t j = 0; j < p.grid_size; ++j) {
    out << format_double(p.frequency(j)) << ',' << format_double(p.intensities[static_cast<std::size_t>(j)]) << '\n';
  }
}

void write_wiener_csv(std::ostream &out, const DecayFit &fit) {
  out << "N,sigma_numerator,sigma_denominator,average\n";
  for (const auto &p : fit.points) {
    out << p.window << ',' << numerator_string(p.sum) << ',' << denominator_string(p.sum) << ','
        << format_double(p.average) << '\n';
  }
  out << "# slope," << format_double(fit.slope) << '\n';
  out << "# bound_exponent," << format_double(wiener_decay_bound_exponent()) << '\n';
}

nlohmann::ordered_json wiener_json(const DecayFit &fit) {
  nlohmann::ordered_json j;
  auto &rows = j["points"] = nlohmann::ordered_json::array();
  for (const auto &p : fit.points) {
    rows.push_back({{"N", p.window},
                    {"sigma_numerator", numerator_string(p.sum)},
                    {"sigma_denominator", denominator_string(p.sum)},
                    {"average", p.average}});
  }
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["bound_exponent"] = wiener_decay_bound_exponent();
  return j;
}

std::vector<std::pair<double, double>> decimated_points(const GridFunction &samples, std::size_t max_segments) {
  const auto n = static_cast<std::size_t>(samples.grid_size());
  std::size_t segments = std::min(n, std::max<std::size_t>(max_segments, 2));
  if (n % 2 == 0 && segments % 2 == 1) --segments;

  std::vector<std::pair<double, double>> points;
  points.reserve(segments + 1);
  for (std::size_t k = 0; k <= segments; ++k) {
    // k * n / segments lands on n / 2 for k = segments / 2 when both are even.
    const auto j = static_cast<std::int64_t>((k * n + segments / 2) / segments);
    points.emplace_back(samples.x(j), samples[j]);
  }
  return points;
}

std::string render_distribution_svg(const GridFunction &samples, const SvgOptions &options) {
  const double plot_w = options.width - 2.0 * options.margin;
  const double plot_h = options.height - 2.0 * options.margin;
  const double left = options.margin;
  const double bottom = options.height - options.margin;
  auto px = [&](double x) { return left + x * plot_w; };
  auto py = [&](double y) { return bottom - y * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << format_pixels(options.width / 2.0) << "\" y=\"" << format_pixels(options.margin / 2.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(options.title) << "</text>\n";

  svg << "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg << "    <rect x=\"" << format_pixels(left) << "\" y=\"" << format_pixels(py(1.0)) << "\" width=\""
      << format_pixels(plot_w) << "\" height=\"" << format_pixels(plot_h) << "\"/>\n";
  static constexpr std::pair<double, const char *> ticks[] = {
      {0.0, "0"}, {0.25, "1/4"}, {0.5, "1/2"}, {0.75, "3/4"}, {1.0, "1"}};
  for (const auto &[t, _] : ticks) {
    svg << "    <line x1=\"" << format_pixels(px(t)) << "\" y1=\"" << format_pixels(bottom) << "\" x2=\""
        << format_pixels(px(t)) << "\" y2=\"" << format_pixels(bottom + 6) << "\"/>\n";
    svg << "    <line x1=\"" << format_pixels(left - 6) << "\" y1=\"" << format_pixels(py(t)) << "\" x2=\""
        << format_pixels(left) << "\" y2=\"" << format_pixels(py(t)) << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g class=\"grid\" stroke=\"#d9d9d9\" stroke-width=\"1\" stroke-dasharray=\"4,2\">\n";
  for (const auto &[t, _] : ticks) {
    if (t == 0.0 || t == 1.0) continue;
    svg << "    <line x1=\"" << format_pixels(px(t)) << "\" y1=\"" << format_pixels(bottom) << "\" x2=\""
        << format_pixels(px(t)) << "\" y2=\"" << format_pixels(py(1.0)) << "\"/>\n";
    svg << "    <line x1=\"" << format_pixels(left) << "\" y1=\"" << format_pixels(py(t)) << "\" x2=\""
        << format_pixels(px(1.0)) << "\" y2=\"" << format_pixels(py(t)) << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g class=\"tick-labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const auto &[t, label] : ticks) {
    svg << "    <text x=\"" << format_pixels(px(t)) << "\" y=\"" << format_pixels(bottom + 20)
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
    svg << "    <text x=\"" << format_pixels(left - 10) << "\" y=\"" << format_pixels(py(t) + 4)
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  svg << "  </g>\n";

  // The curve is stored in data coordinates (17 significant digits) and
  // mapped onto the plot by the group transform.
  svg << "  <g class=\"curve\" transform=\"translate(" << format_pixels(left) << ' ' << format_pixels(bottom)
      << ") scale(" << format_pixels(plot_w) << ' ' << format_pixels(-plot_h) << ")\">\n";
  svg << "    <path fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" d=\"";
  bool first = true;
  for (const auto &[x, y] : decimated_points(samples, options.max_segments)) {
    svg << (first ? "M" : " L") << format_double(x) << ',' << format_double(y);
    first = false;
  }
  svg << "\"/>\n";
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tmdiff
