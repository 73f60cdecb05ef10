#pragma once

#include <gmpxx.h>

#include <string>

namespace scc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact "p/q" text; integers print without a denominator.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// num/den in lowest terms. den must be nonzero.
inline Rational make_rational(long num, long den) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace scc
