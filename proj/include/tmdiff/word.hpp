#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmdiff/limits.hpp"
#include "tmdiff/rational.hpp"

namespace tmdiff {

// Finite block of +1/-1 symbols. Position p of the block carries the
// symbol with word index p - origin_index, so a block of the two-sided
// word starting at index lo has origin_index = -lo.
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<std::int8_t> symbols, std::int64_t origin_index = 0);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::int64_t origin_index() const { return origin_index_; }
  std::span<const std::int8_t> symbols() const { return symbols_; }

  // Lowest and highest word index held by the block.
  std::int64_t first_index() const { return -origin_index_; }
  std::int64_t last_index() const { return first_index() + static_cast<std::int64_t>(size()) - 1; }

  // Symbol at word index n (not block position); throws std::out_of_range.
  int at(std::int64_t n) const;

  friend bool operator==(const SignedWord &, const SignedWord &) = default;

 private:
  std::vector<std::int8_t> symbols_;
  std::int64_t origin_index_ = 0;
};

// Applies 1 -> 1 -1, -1 -> -1 1 the given number of times.
SignedWord substitute(const SignedWord &word, int iterations,
                      const ResourceCaps &caps = default_caps());

// First `length` symbols of the one-sided fixed point v with v_0 = 1.
SignedWord fixed_point_prefix(std::int64_t length, const ResourceCaps &caps = default_caps());

// w_n for lo <= n <= hi, where w_n = v_n for n >= 0 and w_n = v_{-n-1} otherwise.
SignedWord two_sided_block(std::int64_t lo, std::int64_t hi,
                           const ResourceCaps &caps = default_caps());

// (1/(2N+1)) * sum_{n=-N}^{N} w_n w_{n-m}, summed exactly in integers.
// Requires N >= 1 and |m| <= 2N.
Rational direct_autocorrelation(std::int64_t window, std::int64_t lag,
                                const ResourceCaps &caps = default_caps());

// Finite windows are not exactly symmetric in the lag; both signs are
// summed explicitly so the boundary effect can be reported.
struct LagPair {
  Rational positive;  // lag +|m|
  Rational negative;  // lag -|m|
};

LagPair direct_autocorrelation_pair(std::int64_t window, std::int64_t lag,
                                    const ResourceCaps &caps = default_caps());

}  // namespace tmdiff
