#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmdiff/rational.hpp"

namespace tmdiff {

/// Exact autocorrelation coefficients eta(0..max_computed) of the signed
/// Thue-Morse comb, generated from
///
///   eta(0) = 1,  eta(2m) = eta(m),  eta(2m+1) = -(eta(m) + eta(m+1)) / 2.
///
/// For m = 0 the odd branch involves eta(1) on both sides and is solved,
/// giving eta(1) = -eta(0)/3. The table is append-only: extending it never
/// changes a stored value. Negative lags use eta(-m) = eta(m).
class EtaTable {
 public:
  /// Table holding lags 0..max_lag.
  explicit EtaTable(std::int64_t max_lag = 0);

  /// Grows the table to cover 0..max_lag. No-op when already covered.
  void extend(std::int64_t max_lag);

  std::int64_t max_computed() const { return static_cast<std::int64_t>(values_.size()) - 1; }

  /// eta(|m|); throws std::out_of_range past max_computed().
  const Rational &at(std::int64_t m) const;

  std::span<const Rational> values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// eta(m) for any integer m by depth-first memoized recursion (O(log |m|)).
Rational eta(std::int64_t m);

/// Table covering lags 0..max_lag.
EtaTable eta_table(std::int64_t max_lag);

/// Sigma(N) = sum_{m=-N}^{N} eta(m)^2, exact.
Rational wiener_sum(std::int64_t window);

/// Sigma(0), Sigma(1), ..., Sigma(max_window) from one pass over the table.
std::vector<Rational> wiener_sum_series(const EtaTable &table, std::int64_t max_window);

struct WienerAverage {
  std::int64_t window = 0;
  Rational sum;     // Sigma(N)
  Rational exact;   // Sigma(N) / (2N+1)
  double average = 0.0;
};

struct DecayFit {
  std::vector<WienerAverage> points;
  double slope = 0.0;      // least-squares slope of log(average) against log(N)
  double intercept = 0.0;
};

/// Sigma(N)/(2N+1) for each window; windows must be strictly increasing and >= 1.
std::vector<WienerAverage> wiener_averages(std::span<const std::int64_t> windows);

/// Averages plus an ordinary least-squares fit on log-log axes. Needs at
/// least three strictly increasing windows, each >= 2.
DecayFit wiener_average_decay(std::span<const std::int64_t> windows);

/// log2(3/2) - 1, the exponent bounding the decay of Sigma(N)/N.
double wiener_decay_bound_exponent();

}  // namespace tmdiff
