#pragma once

#include <gmpxx.h>

#include <string>

namespace orbicalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" (or "p" when q = 1), the exact textual form used in all JSON output.
inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

/// num/den in canonical form (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace orbicalc
