#pragma once

#include <gmpxx.h>

#include <string>

namespace fermisurf {

// Exact arbitrary-precision rational coefficient type.
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace fermisurf
