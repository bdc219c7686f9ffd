#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tmdiff/autocorrelation.hpp"
#include "tmdiff/cli.hpp"
#include "tmdiff/cross_validation.hpp"
#include "tmdiff/distribution.hpp"
#include "tmdiff/export.hpp"
#include "tmdiff/grid_function.hpp"
#include "tmdiff/periodogram.hpp"
#include "tmdiff/probes.hpp"
#include "tmdiff/riesz.hpp"
#include "tmdiff/word.hpp"

namespace py = pybind11;
using namespace tmdiff;

namespace {

py::object to_fraction(const Rational &q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  static py::object integer = py::module_::import("builtins").attr("int");
  return fraction(integer(numerator_string(q)), integer(denominator_string(q)));
}

py::list to_fractions(std::span<const Rational> values) {
  py::list out;
  for (const auto &q : values) out.append(to_fraction(q));
  return out;
}

py::array_t<double> to_array(std::vector<double> values) {
  py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

py::object parse_json(const nlohmann::ordered_json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thue-Morse diffraction: autocorrelation, distribution function and spectral routes";

  py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);

  m.def("thue_morse_prefix", [](std::int64_t length) {
    const auto word = fixed_point_prefix(length);
    return std::vector<int>(word.symbols().begin(), word.symbols().end());
  }, py::arg("length"), "First `length` symbols (+1/-1) of the one-sided fixed point.");

  m.def("direct_autocorrelation", [](std::int64_t window, std::int64_t lag) {
    return to_fraction(direct_autocorrelation(window, lag));
  }, py::arg("window"), py::arg("lag"));

  m.def("eta", [](std::int64_t lag) { return to_fraction(eta(lag)); }, py::arg("m"));
  m.def("eta_table", [](std::int64_t max_lag) {
    const auto table = eta_table(max_lag);
    return to_fractions(table.values());
  }, py::arg("max_lag"), "eta(0..max_lag) as Fractions.");
  m.def("wiener_sum", [](std::int64_t window) { return to_fraction(wiener_sum(window)); }, py::arg("N"));
  m.def("wiener_average_decay", [](const std::vector<std::int64_t> &windows) {
    return parse_json(wiener_json(wiener_average_decay(windows)));
  }, py::arg("windows"));
  m.def("wiener_decay_bound_exponent", &wiener_decay_bound_exponent);

  py::class_<FourierDistribution>(m, "Distribution")
      .def_property_readonly("order", &FourierDistribution::order)
      .def_property_readonly("label", [](const FourierDistribution &d) { return d.label().describe(); })
      .def("coefficients", [](const FourierDistribution &d) { return to_fractions(d.coefficients().to_rationals()); })
      .def("__call__", [](const FourierDistribution &d, double x) { return evaluate(d, x); }, py::arg("x"))
      .def("density", &FourierDistribution::density, py::arg("x"))
      .def("periodic", [](const FourierDistribution &d, double x) { return periodic_extension(d, x); }, py::arg("x"))
      .def("grid", [](const FourierDistribution &d, std::int64_t grid_size) { return to_array(evaluate_grid(d, grid_size)); },
           py::arg("grid_size"), "Values at j / grid_size, j = 0..grid_size.")
      .def("__repr__", [](const FourierDistribution &d) { return "<Distribution " + d.label().describe() + ">"; });

  m.def("fourier_distribution", [](std::int64_t truncation) {
    return fourier_distribution(truncation, EtaTable(truncation));
  }, py::arg("M"));
  m.def("volterra_coefficients", [](int level) { return to_fractions(volterra_coefficients(level)); }, py::arg("n"));
  m.def("volterra_distribution", [](int level) { return volterra_distribution(level); }, py::arg("n"));
  m.def("phi", &phi_coefficients, py::arg("dist"), "Exact fixed-point map on the sine coefficients.");

  m.def("riesz_density", &riesz_density, py::arg("n"), py::arg("x"));
  m.def("riesz_density_sine_form", &riesz_density_sine_form, py::arg("n"), py::arg("x"));
  m.def("riesz_integral", [](int level, double a, double b) { return RieszDensity(level).integrate(a, b); },
        py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("functional_equation_residual", &functional_equation_residual, py::arg("dist"), py::arg("grid_size") = 4096);
  m.def("plateau_probe", &plateau_probe, py::arg("dist"), py::arg("center"), py::arg("halfwidth"));

  m.def("apply_phi_sampled", [](const std::vector<double> &values) {
    const auto g = GridFunction(static_cast<std::int64_t>(values.size()) - 1, values);
    const auto image = apply_phi(g);
    return to_array({image.values().begin(), image.values().end()});
  }, py::arg("values"), "Quadrature fixed-point map on samples at j / G, j = 0..G.");
  m.def("total_variation_distance", [](const std::vector<double> &a, const std::vector<double> &b) {
    const auto g = static_cast<std::int64_t>(a.size()) - 1;
    const auto h = static_cast<std::int64_t>(b.size()) - 1;
    return total_variation_distance(GridFunction(g, a), GridFunction(h, b));
  }, py::arg("a"), py::arg("b"));

  m.def("periodogram", [](std::int64_t word_length, std::int64_t grid_size) {
    return to_array(periodogram(word_length, grid_size).intensities);
  }, py::arg("N"), py::arg("grid_size"));
  m.def("empirical_distribution", [](std::int64_t word_length, std::int64_t grid_size) {
    const EmpiricalDistribution e(periodogram(word_length, grid_size));
    return to_array({e.cumulative().begin(), e.cumulative().end()});
  }, py::arg("N"), py::arg("grid_size"), "Normalized cumulative periodogram at j / grid_size, j = 0..grid_size.");

  m.def("cross_validate", [](std::int64_t truncation, int level, std::int64_t word_length, std::int64_t grid_size) {
    CrossValidationConfig config;
    config.truncation = truncation;
    config.level = level;
    config.word_length = word_length;
    config.grid_size = grid_size;
    return parse_json(cross_validate(config).to_json());
  }, py::arg("M") = 4096, py::arg("n") = 16, py::arg("N") = 1 << 16, py::arg("grid_size") = 4096);

  m.def("figure_svg", [](int level, std::int64_t grid_size) {
    return render_distribution_svg(GridFunction::sample(volterra_distribution(level), grid_size));
  }, py::arg("n") = 20, py::arg("grid_size") = 4096);

  m.def("run_cli", [](const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs a tmdiff command in-process; returns (exit_code, stdout, stderr).");
}
