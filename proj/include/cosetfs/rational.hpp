#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cosetfs {

// All arithmetic in this library is exact. Character values and counts are
// integers; traces and inner products are rationals.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

/// Accepts "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace cosetfs
