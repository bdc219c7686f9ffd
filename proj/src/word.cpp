#include "tmdiff/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tmdiff {
namespace {

std::int64_t abs_lag(std::int64_t lag) { return lag < 0 ? -lag : lag; }

// Integer sum of w_n w_{n-lag} over n in [-window, window], read from a
// block that must cover [-window - |lag|, window + |lag|].
std::int64_t lagged_product_sum(const SignedWord &block, std::int64_t window, std::int64_t lag) {
  const auto symbols = block.symbols();
  const std::int64_t base = block.origin_index();
  std::int64_t total = 0;
  for (std::int64_t n = -window; n <= window; ++n) {
    total += symbols[static_cast<std::size_t>(n + base)] * symbols[static_cast<std::size_t>(n - lag + base)];
  }
  return total;
}

void check_window(std::int64_t window, std::int64_t lag) {
  if (window < 1) throw std::invalid_argument("autocorrelation window must be >= 1");
  if (abs_lag(lag) > 2 * window) {
    throw std::out_of_range("lag " + std::to_string(lag) + " out of range for window " +
                            std::to_string(window));
  }
}

}  // namespace

SignedWord::SignedWord(std::vector<std::int8_t> symbols, std::int64_t origin_index)
    : symbols_(std::move(symbols)), origin_index_(origin_index) {
  for (const auto s : symbols_) {
    if (s != 1 && s != -1) throw std::invalid_argument("symbols must be +1 or -1");
  }
}

int SignedWord::at(std::int64_t n) const {
  const std::int64_t pos = n + origin_index_;
  if (pos < 0 || pos >= static_cast<std::int64_t>(size())) {
    throw std::out_of_range("word index " + std::to_string(n) + " outside block");
  }
  return symbols_[static_cast<std::size_t>(pos)];
}

SignedWord substitute(const SignedWord &word, int iterations, const ResourceCaps &caps) {
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  if (iterations >= 62) throw ResourceCapError("substitution iterations exceed word length cap");
  check_cap(static_cast<std::int64_t>(word.size()) << iterations, caps.max_word_length,
            "substituted word length");

  std::vector<std::int8_t> current(word.symbols().begin(), word.symbols().end());
  for (int it = 0; it < iterations; ++it) {
    std::vector<std::int8_t> next;
    next.reserve(current.size() * 2);
    for (const auto s : current) {
      next.push_back(s);
      next.push_back(static_cast<std::int8_t>(-s));
    }
    current = std::move(next);
  }
  return SignedWord(std::move(current), word.origin_index());
}

SignedWord fixed_point_prefix(std::int64_t length, const ResourceCaps &caps) {
  if (length < 1) throw std::invalid_argument("prefix length must be >= 1");
  check_cap(length, caps.max_word_length, "word length");

  // rho^{k+1}(1) = rho^k(1) followed by its complement.
  std::vector<std::int8_t> symbols{1};
  symbols.reserve(static_cast<std::size_t>(length) * 2);
  while (static_cast<std::int64_t>(symbols.size()) < length) {
    const std::size_t half = symbols.size();
    for (std::size_t i = 0; i < half; ++i) symbols.push_back(static_cast<std::int8_t>(-symbols[i]));
  }
  symbols.resize(static_cast<std::size_t>(length));
  return SignedWord(std::move(symbols));
}

SignedWord two_sided_block(std::int64_t lo, std::int64_t hi, const ResourceCaps &caps) {
  if (lo > hi) throw std::invalid_argument("two_sided_block requires lo <= hi");
  check_cap(hi - lo + 1, caps.max_word_length, "word length");

  const std::int64_t reach = std::max(hi, -lo - 1);
  const SignedWord v = fixed_point_prefix(std::max<std::int64_t>(reach + 1, 1), caps);
  const auto vs = v.symbols();

  std::vector<std::int8_t> symbols;
  symbols.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) {
    symbols.push_back(vs[static_cast<std::size_t>(n >= 0 ? n : -n - 1)]);
  }
  return SignedWord(std::move(symbols), -lo);
}

Rational direct_autocorrelation(std::int64_t window, std::int64_t lag, const ResourceCaps &caps) {
  check_window(window, lag);
  const std::int64_t reach = window + abs_lag(lag);
  const SignedWord block = two_sided_block(-reach, reach, caps);
  return make_rational(lagged_product_sum(block, window, lag), 2 * window + 1);
}

LagPair direct_autocorrelation_pair(std::int64_t window, std::int64_t lag, const ResourceCaps &caps) {
  check_window(window, lag);
  const std::int64_t m = abs_lag(lag);
  const SignedWord block = two_sided_block(-window - m, window + m, caps);
  return LagPair{make_rational(lagged_product_sum(block, window, m), 2 * window + 1),
                 make_rational(lagged_product_sum(block, window, -m), 2 * window + 1)};
}

}  // namespace tmdiff
