#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "oracles.hpp"
#include "tmdiff/distribution.hpp"
#include "tmdiff/riesz.hpp"

using namespace tmdiff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("fourier distribution") {
  TEST_CASE("coefficients from the eta table") {
    const EtaTable table(16);
    const auto one = fourier_distribution(1, table);
    REQUIRE(one.order() == 1);
    CHECK(one.coefficients().at(1) == make_rational(-1, 3));
    CHECK(evaluate(one, 0.25) == doctest::Approx(0.25 - 1.0 / (3.0 * kPi)).epsilon(1e-15));

    CHECK(fourier_distribution(0, table).order() == 0);
    CHECK(evaluate(fourier_distribution(0, table), 0.3) == doctest::Approx(0.3));

    const auto three = fourier_distribution(3, table).coefficients().to_rationals();
    CHECK(three == std::vector<Rational>{make_rational(-1, 3), make_rational(-1, 3), make_rational(1, 3)});

    CHECK_THROWS_AS(fourier_distribution(17, table), std::out_of_range);
    CHECK(fourier_distribution(16, table).label().describe() == "fourier M=16");
  }

  TEST_CASE("evaluation fixed points and domain") {
    const EtaTable table(4096);
    for (const auto &g : {fourier_distribution(4096, table), volterra_distribution(12)}) {
      CHECK(std::abs(evaluate(g, 0.0)) <= 1e-12);
      CHECK(std::abs(evaluate(g, 1.0) - 1.0) <= 1e-12);
      CHECK(std::abs(evaluate(g, 0.5) - 0.5) <= 1e-12);
      CHECK_THROWS_AS(evaluate(g, -0.1), std::domain_error);
      CHECK_THROWS_AS(evaluate(g, 1.5), std::domain_error);
    }
    CHECK(evaluate(volterra_distribution(1), 0.25) == doctest::Approx(0.25 - 1.0 / (2.0 * kPi)).epsilon(1e-15));
  }

  TEST_CASE("periodic extension") {
    const auto g = volterra_distribution(8);
    CHECK(periodic_extension(g, 1.5) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(periodic_extension(g, -1.0) == doctest::Approx(-1.0));
    CHECK(periodic_extension(g, 2.25) == doctest::Approx(2.0 + evaluate(g, 0.25)).epsilon(1e-14));
    CHECK(periodic_extension(g, -0.75) == doctest::Approx(-1.0 + evaluate(g, 0.25)).epsilon(1e-14));
  }

  TEST_CASE("sine-series symmetry on a 4096 grid") {
    const EtaTable table(1 << 14);
    for (const auto &g : {fourier_distribution(1 << 14, table), volterra_distribution(18), volterra_distribution(3)}) {
      double worst_point = 0.0;
      for (int j = 0; j <= 4096; j += 7) {
        const double x = j / 4096.0;
        worst_point = std::max(worst_point, std::abs(evaluate(g, x) + evaluate(g, 1.0 - x) - 1.0));
      }
      const auto grid = evaluate_grid(g, 4096);
      double worst_grid = 0.0;
      for (int j = 0; j <= 4096; ++j) worst_grid = std::max(worst_grid, std::abs(grid[j] + grid[4096 - j] - 1.0));
      CHECK(worst_point <= 1e-12);
      CHECK(worst_grid <= 1e-12);
    }
  }

  TEST_CASE("grid evaluation agrees with pointwise evaluation") {
    const auto g = volterra_distribution(20);
    const auto grid = evaluate_grid(g, 4096);
    const auto odd_grid = evaluate_grid(g, 1000);  // non power of two: direct path
    double worst = 0.0;
    for (int j = 0; j <= 4096; j += 61) worst = std::max(worst, std::abs(grid[j] - evaluate(g, j / 4096.0)));
    for (int j = 0; j <= 1000; j += 37) worst = std::max(worst, std::abs(odd_grid[j] - evaluate(g, j / 1000.0)));
    CHECK(worst <= 1e-12);
  }
}

TEST_SUITE("volterra iteration") {
  TEST_CASE("low levels") {
    CHECK(volterra_coefficients(0).empty());
    CHECK(volterra_coefficients(1) == std::vector<Rational>{make_rational(-1, 2)});
    CHECK(volterra_coefficients(2) ==
          std::vector<Rational>{make_rational(-1, 4), make_rational(-1, 2), make_rational(1, 4)});
    CHECK_THROWS_AS(volterra_coefficients(-1), std::invalid_argument);

    const auto f0 = volterra_distribution(0);
    CHECK(f0.order() == 0);
    CHECK(evaluate(f0, 0.37) == doctest::Approx(0.37));
    const auto f1 = volterra_distribution(1);
    for (double x : {0.1, 0.2, 0.7}) {
      CHECK(evaluate(f1, x) == doctest::Approx(x - std::sin(2 * kPi * x) / (2 * kPi)).epsilon(1e-14));
    }
    CHECK(volterra_distribution(2).coefficients().to_rationals() == volterra_coefficients(2));
    CHECK(volterra_distribution(5).label().describe() == "volterra n=5");
  }

  TEST_CASE("coefficients match the expanded Riesz product") {
    for (int n = 1; n <= 9; ++n) REQUIRE(volterra_coefficients(n) == oracle::riesz_cosine_coefficients(n));
  }

  TEST_CASE("first coefficient error halves exactly each level") {
    for (int n = 1; n <= 20; ++n) {
      Rational expected = make_rational(1, 6);
      expected /= mpz_class(1) << (n - 1);
      REQUIRE(abs(volterra_distribution(n).coefficients().at(1) + make_rational(1, 3)) == expected);
    }
  }

  TEST_CASE("even-index nesting") {
    auto previous = volterra_coefficients(1);
    for (int n = 2; n <= 16; ++n) {
      const auto current = volterra_coefficients(n);
      REQUIRE(current.size() == (std::size_t{1} << n) - 1);
      for (std::size_t m = 1; m <= previous.size(); ++m) REQUIRE(current[2 * m - 1] == previous[m - 1]);
      previous = current;
    }
  }

  TEST_CASE("coefficients approach eta without ever moving away") {
    const EtaTable table(255);
    for (int j = 1; j <= 8; ++j) {
      const std::size_t top = (std::size_t{1} << j) - 1;
      double last = INFINITY;
      for (int n = j; n <= 20; ++n) {
        const auto c = volterra_distribution(n).coefficients();
        double worst = 0.0;
        for (std::size_t m = 1; m <= top; ++m) worst = std::max(worst, std::abs(c.value(m) - to_double(table.at(m))));
        REQUIRE(worst <= last);
        REQUIRE(worst <= std::ldexp(1.0 / 6.0, j - n) * (1 + 1e-9));
        last = worst;
      }
    }
  }

  TEST_CASE("exact fixed-point map sends F_n to F_{n+1}") {
    auto current = volterra_distribution(0);
    for (int n = 0; n < 14; ++n) {
      const auto next = phi_coefficients(current);
      REQUIRE(next.coefficients().to_rationals() == volterra_coefficients(n + 1));
      CHECK(next.label().kind == Construction::Volterra);
      current = next;
    }
  }

  TEST_CASE("F_n is the integral of the Riesz density") {
    const auto f6 = volterra_distribution(6);
    const RieszDensity density(6);
    for (double x : {0.05, 0.2, 0.31, 0.5, 0.77}) {
      const double integral = oracle::simpson([&](double y) { return density(y); }, 0.0, x, 4000);
      CHECK(evaluate(f6, x) == doctest::Approx(integral).epsilon(1e-10));
    }
  }

  TEST_CASE("term-by-term derivative is the Riesz density") {
    for (int n = 0; n <= 10; ++n) {
      const auto g = volterra_distribution(n);
      for (double x : {0.0, 0.013, 0.25, 0.4, 0.61, 0.999}) REQUIRE(std::abs(g.density(x) - riesz_density(n, x)) <= 1e-10);
    }
    // on a grid, via the folded cosine series, up to level 20
    for (int n : {12, 16, 20}) {
      const auto c = volterra_distribution(n).coefficients().to_doubles();
      std::vector<double> weights(c.size());
      for (std::size_t m = 0; m < c.size(); ++m) weights[m] = 2.0 * c[m];
      const auto series = cosine_series_on_grid(weights, 4096);
      double worst = 0.0;
      for (int j = 0; j <= 4096; ++j) worst = std::max(worst, std::abs(1.0 + series[j] - riesz_density(n, j / 4096.0)));
      CHECK(worst <= 1e-10);
    }
  }

  TEST_CASE("Volterra iterates are non-decreasing; Fourier truncations only nearly") {
    for (int n : {4, 12, 20}) {
      const auto grid = evaluate_grid(volterra_distribution(n), 4096);
      double worst = 0.0;
      for (int j = 0; j < 4096; ++j) worst = std::min(worst, grid[j + 1] - grid[j]);
      CHECK(worst >= -1e-12);
    }
    const EtaTable table(4096);
    const auto grid = evaluate_grid(fourier_distribution(4096, table), 4096);
    double worst = 0.0;
    for (int j = 0; j < 4096; ++j) worst = std::min(worst, grid[j + 1] - grid[j]);
    MESSAGE("most negative Fourier(M=4096) grid step: " << worst);
    CHECK(worst > -1e-4);
  }

  TEST_CASE("level cap") {
    ResourceCaps caps;
    caps.max_level = 10;
    CHECK_THROWS_AS(volterra_distribution(11, caps), ResourceCapError);
  }
}
