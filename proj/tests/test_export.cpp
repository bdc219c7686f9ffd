#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tmdiff/export.hpp"

using namespace tmdiff;

namespace {

std::vector<std::string> lines_of(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("export") {
  TEST_CASE("double formatting round-trips") {
    for (double v : {0.0, -1.0 / 3.0, 1e-300, 0.1, 2.0 / 3.0, 123456.789}) CHECK(std::stod(format_double(v)) == v);
    CHECK(format_double(0.5) == "0.5");
  }

  TEST_CASE("eta csv") {
    const EtaTable table(9);
    std::ostringstream exact, floats;
    write_eta_csv(exact, table, PrecisionMode::Exact);
    write_eta_csv(floats, table, PrecisionMode::Float);
    const auto rows = lines_of(exact.str());
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "m,numerator,denominator,value");
    CHECK(rows[1] == "0,1,1,1");
    CHECK(rows[2].starts_with("1,-1,3,"));
    CHECK(rows[10].starts_with("9,1,6,"));
    const auto float_rows = lines_of(floats.str());
    CHECK(float_rows[0] == "m,value");
    CHECK(std::stod(float_rows[2].substr(2)) == -1.0 / 3.0);

    std::ostringstream again;
    write_eta_csv(again, EtaTable(9), PrecisionMode::Exact);
    CHECK(again.str() == exact.str());
  }

  TEST_CASE("eta json keeps exact values as strings") {
    const auto j = eta_json(EtaTable(9), PrecisionMode::Exact);
    CHECK(j["values"].size() == 10);
    CHECK(j["values"][9]["numerator"] == "1");
    CHECK(j["values"][9]["denominator"] == "6");
    CHECK(j["values"][1]["value"].get<double>() == -1.0 / 3.0);
    const auto f = eta_json(EtaTable(3), PrecisionMode::Float);
    CHECK_FALSE(f["values"][1].contains("numerator"));
  }

  TEST_CASE("coefficients and samples") {
    const auto g = volterra_distribution(2);
    std::ostringstream out;
    write_coefficients_csv(out, g.coefficients(), PrecisionMode::Exact);
    CHECK(lines_of(out.str()) == std::vector<std::string>{"m,numerator,denominator,value", "1,-1,4,-0.25", "2,-1,2,-0.5", "3,1,4,0.25"});

    const auto samples = GridFunction::sample(g, 4);
    std::ostringstream s;
    write_samples_csv(s, samples);
    const auto rows = lines_of(s.str());
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "x,value");
    CHECK(rows[3] == "0.5,0.5");
    const auto j = samples_json(samples, "volterra n=2");
    CHECK(j["label"] == "volterra n=2");
    CHECK(j["x"].size() == 5);
    CHECK(j["value"][2].get<double>() == 0.5);
  }

  TEST_CASE("wiener csv ends with the fit") {
    const std::vector<std::int64_t> windows{2, 4, 8, 16};
    std::ostringstream out;
    write_wiener_csv(out, wiener_average_decay(windows));
    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 7);
    CHECK(rows[1] == "2,13,9,0.28888888888888886");
    CHECK(rows[5].starts_with("# slope,"));
    CHECK(rows[6].starts_with("# bound_exponent,"));
  }

  TEST_CASE("decimation keeps the ends and the centre") {
    const auto samples = GridFunction::sample(volterra_distribution(6), 4098);
    const auto points = decimated_points(samples, 100);
    CHECK(points.size() <= 101);
    CHECK(points.front() == std::pair<double, double>{0.0, samples[0]});
    CHECK(points.back().first == 1.0);
    bool centre = false;
    for (const auto &[x, y] : points) centre = centre || x == 0.5;
    CHECK(centre);
    for (std::size_t i = 1; i < points.size(); ++i) REQUIRE(points[i].first > points[i - 1].first);
    CHECK(decimated_points(samples, 10000).size() == 4099);
  }

  TEST_CASE("svg structure") {
    const auto samples = GridFunction::sample(volterra_distribution(4), 64);
    SvgOptions options;
    options.title = "a < b";
    const auto svg = render_distribution_svg(samples, options);
    CHECK(svg.starts_with("<?xml"));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("a &lt; b") != std::string::npos);
    CHECK(svg.find(">1/4</text>") != std::string::npos);
    CHECK(svg.find(">3/4</text>") != std::string::npos);
    CHECK(svg.find(" L0.5,0.5 ") != std::string::npos);
    CHECK(svg.ends_with("</svg>\n"));
    CHECK(render_distribution_svg(samples, options) == svg);
  }
}
