#include "tmdiff/autocorrelation.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace tmdiff {
namespace {

Rational eta_memo(std::int64_t m, std::map<std::int64_t, Rational> &memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  Rational value;
  if (m == 0) {
    value = 1;
  } else if (m == 1) {
    value = -eta_memo(0, memo) / 3;
  } else if (m % 2 == 0) {
    value = eta_memo(m / 2, memo);
  } else {
    const std::int64_t half = m / 2;
    value = -(eta_memo(half, memo) + eta_memo(half + 1, memo)) / 2;
  }
  memo.emplace(m, value);
  return value;
}

void check_increasing(std::span<const std::int64_t> windows, std::int64_t minimum) {
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (windows[i] < minimum) {
      throw std::invalid_argument("window sizes must be >= " + std::to_string(minimum));
    }
    if (i > 0 && windows[i] <= windows[i - 1]) {
      throw std::invalid_argument("window sizes must be strictly increasing");
    }
  }
}

}  // namespace

EtaTable::EtaTable(std::int64_t max_lag) {
  values_.emplace_back(1);
  extend(max_lag);
}

void EtaTable::extend(std::int64_t max_lag) {
  if (max_lag < 0) throw std::invalid_argument("eta table size must be >= 0");
  values_.reserve(static_cast<std::size_t>(max_lag) + 1);
  for (auto m = static_cast<std::int64_t>(values_.size()); m <= max_lag; ++m) {
    if (m == 1) {
      values_.push_back(-values_[0] / 3);
    } else if (m % 2 == 0) {
      values_.push_back(values_[static_cast<std::size_t>(m / 2)]);
    } else {
      const auto half = static_cast<std::size_t>(m / 2);
      Rational next = -(values_[half] + values_[half + 1]) / 2;
      values_.push_back(std::move(next));
    }
  }
}

const Rational &EtaTable::at(std::int64_t m) const {
  const std::int64_t lag = m < 0 ? -m : m;
  if (lag > max_computed()) {
    throw std::out_of_range("lag " + std::to_string(m) + " beyond eta table size " +
                            std::to_string(max_computed()));
  }
  return values_[static_cast<std::size_t>(lag)];
}

Rational eta(std::int64_t m) {
  std::map<std::int64_t, Rational> memo;
  return eta_memo(m < 0 ? -m : m, memo);
}

EtaTable eta_table(std::int64_t max_lag) { return EtaTable(max_lag); }

Rational wiener_sum(std::int64_t window) {
  if (window < 0) throw std::invalid_argument("Wiener sum window must be >= 0");
  return wiener_sum_series(EtaTable(window), window).back();
}

std::vector<Rational> wiener_sum_series(const EtaTable &table, std::int64_t max_window) {
  if (max_window < 0) throw std::invalid_argument("Wiener sum window must be >= 0");
  if (max_window > table.max_computed()) throw std::out_of_range("eta table too small for Wiener sums");

  std::vector<Rational> series;
  series.reserve(static_cast<std::size_t>(max_window) + 1);
  Rational running = 1;
  series.push_back(running);
  for (std::int64_t m = 1; m <= max_window; ++m) {
    const Rational &e = table.at(m);
    running += 2 * e * e;
    series.push_back(running);
  }
  return series;
}

std::vector<WienerAverage> wiener_averages(std::span<const std::int64_t> windows) {
  check_increasing(windows, 1);
  if (windows.empty()) return {};

  const EtaTable table(windows.back());
  const auto series = wiener_sum_series(table, windows.back());
  std::vector<WienerAverage> out;
  out.reserve(windows.size());
  for (const auto n : windows) {
    WienerAverage point;
    point.window = n;
    point.sum = series[static_cast<std::size_t>(n)];
    point.exact = point.sum / (2 * n + 1);
    point.average = to_double(point.exact);
    out.push_back(std::move(point));
  }
  return out;
}

DecayFit wiener_average_decay(std::span<const std::int64_t> windows) {
  check_increasing(windows, 2);
  if (windows.size() < 3) throw std::invalid_argument("decay fit needs at least three windows");

  DecayFit fit;
  fit.points = wiener_averages(windows);

  const auto count = static_cast<double>(fit.points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto &p : fit.points) {
    const double lx = std::log(static_cast<double>(p.window));
    const double ly = std::log(p.average);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;
  return fit;
}

double wiener_decay_bound_exponent() { return std::log2(1.5) - 1.0; }

}  // namespace tmdiff
