#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "symz/errors.hpp"

namespace symz {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash || !digit_before) throw InputError("malformed rational '" + std::string(text) + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw InputError("malformed rational '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace symz
