#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tmdiff {

// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline double to_double(const Rational &r) { return r.get_d(); }

inline std::string numerator_string(const Rational &r) { return r.get_num().get_str(); }
inline std::string denominator_string(const Rational &r) { return r.get_den().get_str(); }

}  // namespace tmdiff
