#include "tmdiff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "tmdiff/autocorrelation.hpp"
#include "tmdiff/cross_validation.hpp"
#include "tmdiff/distribution.hpp"
#include "tmdiff/grid_function.hpp"
#include "tmdiff/probes.hpp"
#include "tmdiff/riesz.hpp"
#include "tmdiff/word.hpp"

namespace tmdiff {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckResult attempt(const std::string &name, const std::function<CheckResult()> &body) {
  try {
    CheckResult r = body();
    r.name = name;
    return r;
  } catch (const std::exception &e) {
    return CheckResult{name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &options, const ResourceCaps &caps) {
  std::vector<CheckResult> results;

  results.push_back(attempt("eta exact values and recursion", [&] {
    const EtaTable table(8192);
    bool ok = table.at(0) == 1 && table.at(1) == make_rational(-1, 3);
    for (std::int64_t m = 0; ok && 2 * m + 1 <= 8192; ++m) {
      ok = table.at(2 * m) == table.at(m) &&
           (m == 0 || table.at(2 * m + 1) == -(table.at(m) + table.at(m + 1)) / 2);
    }
    return CheckResult{"", ok, "lags 0..8192"};
  }));

  results.push_back(attempt("direct autocorrelation agrees with eta", [&] {
    const EtaTable table(256);
    double worst = 0.0;
    for (std::int64_t m = 0; m <= 256; ++m) {
      worst = std::max(worst, std::abs(to_double(direct_autocorrelation(1 << 16, m, caps) - table.at(m))));
    }
    return CheckResult{"", worst <= 0.01, "max error " + sci(worst) + " (N=2^16, m<=256)"};
  }));

  results.push_back(attempt("Wiener inequality Sigma(4N) <= 3/2 Sigma(2N)", [&] {
    const EtaTable table(4 * 4096);
    const auto sigma = wiener_sum_series(table, 4 * 4096);
    bool ok = true;
    for (std::size_t n = 1; ok && n <= 4096; ++n) ok = 2 * sigma[4 * n] <= 3 * sigma[2 * n];
    return CheckResult{"", ok, "exact, N=1..4096"};
  }));

  results.push_back(attempt("Wiener averages decay at least as fast as the bound", [&] {
    std::vector<std::int64_t> windows;
    for (std::int64_t n = 16; n <= (1 << 14); n *= 2) windows.push_back(n);
    const auto fit = wiener_average_decay(windows);
    return CheckResult{"", fit.slope <= wiener_decay_bound_exponent(),
                       "slope " + sci(fit.slope) + ", bound " + sci(wiener_decay_bound_exponent())};
  }));

  results.push_back(attempt("Volterra coefficients converge to eta(1)", [&] {
    bool ok = true;
    std::vector<Rational> previous;
    for (int n = 1; ok && n <= options.level; ++n) {
      auto c = volterra_coefficients(n, caps);
      Rational expected = make_rational(1, 6);
      expected /= mpz_class(1) << (n - 1);
      ok = abs(c[0] + make_rational(1, 3)) == expected;
      for (std::size_t m = 1; ok && m <= previous.size(); ++m) ok = c[2 * m - 1] == previous[m - 1];
      previous = std::move(c);
    }
    return CheckResult{"", ok, "levels 1.." + std::to_string(options.level)};
  }));

  results.push_back(attempt("functional equation residual decreases", [&] {
    const EtaTable table(4096);
    double last = INFINITY;
    bool ok = true;
    std::string detail;
    for (const std::int64_t order : {64, 256, 1024, 4096}) {
      const double r = functional_equation_residual(fourier_distribution(order, table), 1 << 14);
      ok = ok && r < last;
      last = r;
      detail += (detail.empty() ? "" : ", ") + sci(r);
    }
    return CheckResult{"", ok, detail};
  }));

  const auto report = cross_validate({options.truncation, options.level, options.word_length, options.grid_size, 4}, caps);

  results.push_back(attempt("route symmetry G(x) + G(1-x) = 1", [&] {
    const double worst = std::max({report.fourier_symmetry, report.volterra_symmetry, report.empirical_symmetry});
    return CheckResult{"", worst <= 1e-12, "max defect " + sci(worst)};
  }));

  results.push_back(attempt("Fourier route agrees with Volterra route", [&] {
    return CheckResult{"", report.fourier_vs_volterra <= 1e-3, "sup distance " + sci(report.fourier_vs_volterra)};
  }));

  results.push_back(attempt("periodogram route agrees with Volterra route", [&] {
    return CheckResult{"", report.volterra_vs_empirical <= 0.02, "sup distance " + sci(report.volterra_vs_empirical)};
  }));

  results.push_back(attempt("Riesz product forms agree", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
      const RieszDensity f(n);
      for (int j = 0; j <= 4096; ++j) {
        const double x = j / 4096.0;
        worst = std::max(worst, std::abs(f(x) - f.sine_form(x)));
      }
    }
    return CheckResult{"", worst <= 1e-12, "max difference " + sci(worst)};
  }));

  results.push_back(attempt("Riesz densities have unit mass", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 16; ++n) worst = std::max(worst, std::abs(RieszDensity(n).integrate_simpson(1 << 17) - 1.0));
    return CheckResult{"", worst <= 1e-10, "max error " + sci(worst)};
  }));

  results.push_back(attempt("no plateau is a gap", [&] {
    const FourierDistribution limit = volterra_distribution(options.level, caps);
    std::vector<double> centers{0.5, 0.25, 0.75, 0.375};
    for (int m = 1; m < 16; m += 2) centers.push_back(m / 16.0);
    double smallest = INFINITY;
    for (const double c : centers) smallest = std::min(smallest, plateau_probe(limit, c, 1e-3));
    return CheckResult{"", smallest > 0.0, "smallest window mass " + sci(smallest)};
  }));

  results.push_back(attempt("Volterra iterate is non-decreasing", [&] {
    const auto g = GridFunction::sample(volterra_distribution(options.level, caps), options.grid_size);
    double worst = 0.0;
    for (std::int64_t j = 0; j < g.grid_size(); ++j) worst = std::min(worst, g[j + 1] - g[j]);
    return CheckResult{"", worst >= -1e-9, "most negative step " + sci(worst)};
  }));

  return results;
}

nlohmann::ordered_json verification_json(const std::vector<CheckResult> &results) {
  nlohmann::ordered_json j;
  bool all = true;
  auto &checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto &r : results) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  j["passed"] = all;
  return j;
}

std::string verification_text(const std::vector<CheckResult> &results) {
  std::string out;
  for (const auto &r : results) out += (r.passed ? "PASS  " : "FAIL  ") + r.name + "  [" + r.detail + "]\n";
  return out;
}

}  // namespace tmdiff
