#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tensorwalk {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "3", "-1/2", "num/den".
inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline double rat_d(const Rational& r) { return r.get_d(); }

}  // namespace tensorwalk
