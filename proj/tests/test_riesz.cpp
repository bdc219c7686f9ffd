#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "tmdiff/riesz.hpp"

using namespace tmdiff;

TEST_SUITE("riesz density") {
  TEST_CASE("values") {
    CHECK(riesz_density(0, 0.3) == 1.0);
    CHECK(riesz_density(1, 0.5) == doctest::Approx(2.0));
    CHECK(riesz_density(3, 0.0) == 0.0);
    CHECK(riesz_density(2, 0.25) == doctest::Approx(2.0));
    CHECK(riesz_density_sine_form(2, 0.25) == doctest::Approx(2.0));
    CHECK_THROWS_AS(riesz_density(2, 1.2), std::domain_error);
    CHECK_THROWS_AS(RieszDensity(-1), std::invalid_argument);
  }

  TEST_CASE("non-negative, with zeros at 0 for n >= 1") {
    for (int n = 1; n <= 12; ++n) {
      const RieszDensity f(n);
      CHECK(f(0.0) == 0.0);
      double lowest = INFINITY;
      for (int j = 0; j <= 1000; ++j) lowest = std::min(lowest, f((j + 0.5) / 1001.0));
      CHECK(lowest >= 0.0);
    }
  }

  TEST_CASE("product and sine forms agree on a 4096 grid") {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
      const RieszDensity f(n);
      for (int j = 0; j <= 4096; ++j) worst = std::max(worst, std::abs(f(j / 4096.0) - f.sine_form(j / 4096.0)));
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("doubling recursion, with the argument 2x read mod 1") {
    double worst = 0.0;
    for (int n = 0; n < 16; ++n) {
      const RieszDensity f(n), g(n + 1);
      for (int j = 0; j <= 4096; ++j) {
        const double x = j / 4096.0;
        const double expected = (1.0 - std::cos(2.0 * std::numbers::pi * x)) * f(std::fmod(2.0 * x, 1.0));
        worst = std::max(worst, std::abs(g(x) - expected));
      }
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("unit mass") {
    for (int n = 0; n <= 16; ++n) CHECK(std::abs(RieszDensity(n).integrate_simpson(1 << 17) - 1.0) <= 1e-10);
    CHECK_THROWS_AS(RieszDensity(3).integrate_simpson(7), std::invalid_argument);
  }

  TEST_CASE("window integrals add up and match Simpson") {
    const RieszDensity f(10);
    const double whole = f.integrate(0.0, 1.0);
    CHECK(whole == doctest::Approx(1.0).epsilon(1e-12));
    const double split = f.integrate(0.0, 0.3) + f.integrate(0.3, 0.71) + f.integrate(0.71, 1.0);
    CHECK(split == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.integrate(0.4, 0.4) == 0.0);
    CHECK_THROWS_AS(f.integrate(0.5, 0.4), std::invalid_argument);
  }

  TEST_CASE("tiny window masses keep relative precision") {
    // level 1: h - sin(2 pi h)/(2 pi), expanded to avoid cancellation
    const double h = 1e-4;
    const double a = 2 * std::numbers::pi;
    const double expected = a * a * h * h * h / 6.0 - a * a * a * a * std::pow(h, 5) / 120.0;
    CHECK(RieszDensity(1).integrate(0.0, h) == doctest::Approx(expected).epsilon(1e-6));
    const double deep = RieszDensity(20).integrate(0.5 - 1e-3, 0.5 + 1e-3);
    CHECK(deep > 0.0);
    CHECK(deep < 1e-15);
  }
}
