#include "tmdiff/distribution.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tmdiff/fft.hpp"

namespace tmdiff {
namespace {

constexpr double kPi = std::numbers::pi;

// Angle-addition recurrences drift by roughly one ulp per step; resetting
// from sin/cos every block keeps the drift bounded.
constexpr std::size_t kRenormalizeEvery = 1024;

struct Compensated {
  double sum = 0.0;
  double carry = 0.0;
  void add(double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// sum_k weights[k-1] * trig(2 pi k x), trig = sin or cos.
template <bool Sine>
double trig_series(std::span<const double> weights, double x) {
  const double theta = 2.0 * kPi * x;
  const double step_cos = std::cos(theta);
  const double step_sin = std::sin(theta);
  double c = step_cos;
  double s = step_sin;
  Compensated acc;
  for (std::size_t k = 1; k <= weights.size(); ++k) {
    if (k % kRenormalizeEvery == 0) {
      const double angle = theta * static_cast<double>(k);
      c = std::cos(angle);
      s = std::sin(angle);
    }
    acc.add(weights[k - 1] * (Sine ? s : c));
    const double next_c = c * step_cos - s * step_sin;
    s = s * step_cos + c * step_sin;
    c = next_c;
  }
  return acc.sum;
}

// Folds weights modulo the grid and returns the (complex) transform whose
// imaginary/real parts give the sine/cosine series on j / grid_size.
std::vector<double> trig_series_on_grid(std::span<const double> weights, std::int64_t grid_size,
                                        bool sine) {
  if (grid_size < 1) throw std::invalid_argument("grid size must be >= 1");
  const auto g = static_cast<std::size_t>(grid_size);

  std::vector<long double> folded(g, 0.0L);
  for (std::size_t k = 1; k <= weights.size(); ++k) folded[k % g] += weights[k - 1];

  std::vector<double> out(g + 1, 0.0);
  if (is_power_of_two(g) && g >= 8) {
    std::vector<std::complex<double>> data(g);
    for (std::size_t r = 0; r < g; ++r) data[r] = static_cast<double>(folded[r]);
    fft_in_place(data);
    for (std::size_t j = 0; j < g; ++j) out[j] = sine ? -data[j].imag() : data[j].real();
  } else {
    std::vector<double> table(g);
    for (std::size_t r = 0; r < g; ++r) {
      const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(g);
      table[r] = sine ? std::sin(angle) : std::cos(angle);
    }
    for (std::size_t j = 0; j < g; ++j) {
      long double acc = 0.0L;
      for (std::size_t r = 0; r < g; ++r) acc += folded[r] * table[(r * j) % g];
      out[j] = static_cast<double>(acc);
    }
  }
  out[g] = out[0];
  if (sine) {
    out[0] = 0.0;
    out[g] = 0.0;
    if (g % 2 == 0) out[g / 2] = 0.0;
  }
  return out;
}

// Numerators S_m = 2^n c^(n)_m, m = 1..2^n - 1. The linear term carries
// S_0 = 2^n, the slot past the end is zero.
std::vector<std::int64_t> volterra_scaled(int level, const ResourceCaps &caps) {
  if (level < 0) throw std::invalid_argument("Volterra level must be >= 0");
  check_cap(level, caps.max_level, "Volterra level");
  if (level > 60) throw ResourceCapError("Volterra level beyond exact int64 range");

  std::vector<std::int64_t> prev;  // index m - 1
  for (int l = 0; l < level; ++l) {
    const std::int64_t lead = std::int64_t{1} << l;
    const std::size_t count = prev.size();  // 2^l - 1
    auto at = [&](std::size_t m) -> std::int64_t {
      if (m == 0) return lead;
      return m <= count ? prev[m - 1] : 0;
    };
    std::vector<std::int64_t> next(2 * count + 1);
    for (std::size_t m = 0; m <= count; ++m) {
      if (m >= 1) next[2 * m - 1] = 2 * prev[m - 1];
      next[2 * m] = -(at(m) + at(m + 1));
    }
    prev = std::move(next);
  }
  return prev;
}

std::int64_t checked_sum(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient numerator overflow");
  return out;
}

}  // namespace

ExactCoefficients::ExactCoefficients(std::span<const Rational> values) {
  mpz_class common = 1;
  for (const auto &v : values) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
  numerators_.reserve(values.size());
  for (const auto &v : values) {
    mpz_class scaled = v.get_num() * (common / v.get_den());
    if (!scaled.fits_slong_p()) throw std::overflow_error("coefficient numerator exceeds int64");
    numerators_.push_back(scaled.get_si());
  }
  denominator_ = common;
}

ExactCoefficients::ExactCoefficients(std::vector<std::int64_t> numerators, mpz_class denominator)
    : numerators_(std::move(numerators)), denominator_(std::move(denominator)) {
  if (denominator_ <= 0) throw std::invalid_argument("coefficient denominator must be positive");
}

Rational ExactCoefficients::at(std::size_t m) const {
  if (m < 1 || m > numerators_.size()) throw std::out_of_range("coefficient index out of range");
  Rational r(mpz_class(static_cast<long>(numerators_[m - 1])), denominator_);
  r.canonicalize();
  return r;
}

double ExactCoefficients::value(std::size_t m) const { return to_double(at(m)); }

std::vector<Rational> ExactCoefficients::to_rationals() const {
  std::vector<Rational> out;
  out.reserve(size());
  for (std::size_t m = 1; m <= size(); ++m) out.push_back(at(m));
  return out;
}

std::vector<double> ExactCoefficients::to_doubles() const {
  // Exact division of the int64 numerator by the (often power-of-two)
  // denominator is correctly rounded when both convert exactly.
  std::vector<double> out(size());
  const double den = denominator_.get_d();
  const bool exact_den = mpz_sizeinbase(denominator_.get_mpz_t(), 2) <= 53;
  for (std::size_t m = 0; m < size(); ++m) {
    const std::int64_t num = numerators_[m];
    const bool exact_num = num > -(std::int64_t{1} << 53) && num < (std::int64_t{1} << 53);
    out[m] = (exact_den && exact_num) ? static_cast<double>(num) / den : value(m + 1);
  }
  return out;
}

std::string DistributionLabel::describe() const {
  switch (kind) {
    case Construction::FourierTruncation: return "fourier M=" + std::to_string(order);
    case Construction::Volterra: return "volterra n=" + std::to_string(order);
    case Construction::Custom: break;
  }
  return "custom M=" + std::to_string(order);
}

FourierDistribution::FourierDistribution(ExactCoefficients coefficients, DistributionLabel label)
    : exact_(std::move(coefficients)), label_(label) {
  if (label_.kind == Construction::Custom) label_.order = static_cast<std::int64_t>(exact_.size());
  weights_ = exact_.to_doubles();
  for (std::size_t m = 0; m < weights_.size(); ++m) weights_[m] /= static_cast<double>(m + 1) * kPi;
}

double FourierDistribution::density(double x) const {
  std::vector<double> cosine(exact_.size());
  const auto c = exact_.to_doubles();
  for (std::size_t m = 0; m < c.size(); ++m) cosine[m] = 2.0 * c[m];
  return 1.0 + trig_series<false>(cosine, x);
}

FourierDistribution fourier_distribution(std::int64_t truncation, const EtaTable &eta_source) {
  if (truncation < 0) throw std::invalid_argument("truncation order must be >= 0");
  if (truncation > eta_source.max_computed()) {
    throw std::out_of_range("eta table covers lags up to " + std::to_string(eta_source.max_computed()) +
                            ", truncation needs " + std::to_string(truncation));
  }
  const auto values = eta_source.values().subspan(1, static_cast<std::size_t>(truncation));
  return FourierDistribution(ExactCoefficients(values), {Construction::FourierTruncation, truncation});
}

double evaluate(const FourierDistribution &dist, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("evaluation point outside [0,1]");
  return x + trig_series<true>(dist.sine_weights(), x);
}

double periodic_extension(const FourierDistribution &dist, double x) {
  const double whole = std::floor(x);
  return whole + evaluate(dist, x - whole);
}

std::vector<double> sine_series_on_grid(std::span<const double> weights, std::int64_t grid_size) {
  return trig_series_on_grid(weights, grid_size, true);
}

std::vector<double> cosine_series_on_grid(std::span<const double> weights, std::int64_t grid_size) {
  return trig_series_on_grid(weights, grid_size, false);
}

std::vector<double> evaluate_grid(const FourierDistribution &dist, std::int64_t grid_size) {
  auto values = sine_series_on_grid(dist.sine_weights(), grid_size);
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] += static_cast<double>(j) / static_cast<double>(grid_size);
  }
  return values;
}

std::vector<Rational> volterra_coefficients(int level, const ResourceCaps &caps) {
  const auto scaled = volterra_scaled(level, caps);
  const mpz_class den = mpz_class(1) << level;
  std::vector<Rational> out;
  out.reserve(scaled.size());
  for (const auto s : scaled) {
    Rational r(mpz_class(static_cast<long>(s)), den);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

FourierDistribution volterra_distribution(int level, const ResourceCaps &caps) {
  auto scaled = volterra_scaled(level, caps);
  return FourierDistribution(ExactCoefficients(std::move(scaled), mpz_class(1) << level),
                             {Construction::Volterra, level});
}

FourierDistribution phi_coefficients(const FourierDistribution &dist) {
  const auto &c = dist.coefficients();
  const auto nums = c.numerators();
  const std::size_t order = c.size();
  if (!c.denominator().fits_slong_p()) throw std::overflow_error("coefficient denominator exceeds int64");
  const std::int64_t lead = c.denominator().get_si();

  auto at = [&](std::size_t m) -> std::int64_t {
    if (m == 0) return lead;
    return m <= order ? nums[m - 1] : 0;
  };
  std::vector<std::int64_t> next(2 * order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    if (m >= 1) next[2 * m - 1] = checked_sum(nums[m - 1], nums[m - 1]);
    next[2 * m] = -checked_sum(at(m), at(m + 1));
  }

  DistributionLabel label{Construction::Custom, 0};
  if (dist.label().kind == Construction::Volterra) label = {Construction::Volterra, dist.label().order + 1};
  return FourierDistribution(ExactCoefficients(std::move(next), c.denominator() * 2), label);
}

}  // namespace tmdiff
