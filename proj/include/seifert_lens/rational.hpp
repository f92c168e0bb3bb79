#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/rational.hpp>

namespace seifert_lens {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(Rational const& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Representative of r modulo m in [0, m). m must be positive.
inline Rational mod_rational(Rational const& r, std::int64_t m) {
  // floor(r / m) computed on the integer part of num / (den * m)
  std::int64_t const num = r.numerator();
  std::int64_t const div = r.denominator() * m;
  std::int64_t q = num / div;
  if (num % div != 0 && num < 0) --q;
  return r - Rational(q * m);
}

inline bool is_integer(Rational const& r) { return r.denominator() == 1; }

}  // namespace seifert_lens
