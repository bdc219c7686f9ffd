#include "tmdiff/periodogram.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "tmdiff/fft.hpp"
#include "tmdiff/word.hpp"

namespace tmdiff {

double Periodogram::mean_intensity() const {
  if (intensities.empty()) return 0.0;
  const long double total = std::accumulate(intensities.begin(), intensities.end(), 0.0L);
  return static_cast<double>(total / static_cast<long double>(intensities.size()));
}

Periodogram periodogram(std::int64_t word_length, std::int64_t grid_size, const ResourceCaps &caps) {
  if (word_length < 1 || !is_power_of_two(static_cast<std::uint64_t>(word_length))) {
    throw std::invalid_argument("periodogram word length must be a power of two");
  }
  if (grid_size < word_length || !is_power_of_two(static_cast<std::uint64_t>(grid_size))) {
    throw std::invalid_argument("periodogram grid must be a power of two no smaller than the word");
  }
  check_cap(word_length, caps.max_word_length, "word length");
  check_cap(grid_size, caps.max_grid_size, "grid size");

  const SignedWord word = fixed_point_prefix(word_length, caps);
  std::vector<std::complex<double>> data(static_cast<std::size_t>(grid_size));
  const auto symbols = word.symbols();
  for (std::size_t n = 0; n < symbols.size(); ++n) data[n] = static_cast<double>(symbols[n]);
  fft_in_place(data);

  Periodogram p;
  p.word_length = word_length;
  p.grid_size = grid_size;
  p.intensities.resize(data.size());
  const auto length = static_cast<double>(word_length);
  for (std::size_t j = 0; j < data.size(); ++j) p.intensities[j] = std::norm(data[j]) / length;
  return p;
}

EmpiricalDistribution::EmpiricalDistribution(const Periodogram &p) {
  const std::size_t g = p.intensities.size();
  if (g == 0) throw std::invalid_argument("empty periodogram");

  std::vector<long double> running(g + 1, 0.0L);
  for (std::size_t j = 0; j < g; ++j) {
    const long double left = p.intensities[j];
    const long double right = p.intensities[(j + 1) % g];
    running[j + 1] = running[j] + 0.5L * (left + right);
  }
  const long double total = running[g];
  if (!(total > 0.0L)) throw std::invalid_argument("periodogram has no mass");

  cumulative_.resize(g + 1);
  for (std::size_t j = 0; j <= g; ++j) cumulative_[j] = static_cast<double>(running[j] / total);
  cumulative_[g] = 1.0;
}

double EmpiricalDistribution::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("empirical distribution argument outside [0,1]");
  const auto g = static_cast<double>(grid_size());
  const double scaled = x * g;
  const auto lower = static_cast<std::size_t>(std::floor(scaled));
  if (lower >= cumulative_.size() - 1) return cumulative_.back();
  const double frac = scaled - static_cast<double>(lower);
  return cumulative_[lower] + frac * (cumulative_[lower + 1] - cumulative_[lower]);
}

double empirical_distribution(const Periodogram &p, double x) { return EmpiricalDistribution(p)(x); }

}  // namespace tmdiff
