#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ulat {

/// Exact rational number. Always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& q);

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline const Rational& min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Uniform rational with numerator in [-num_bound, num_bound] and
/// denominator in [1, den_bound].
Rational random_rational(std::mt19937_64& rng, long num_bound = 20, long den_bound = 12);

/// Same, but nonnegative.
Rational random_nonnegative(std::mt19937_64& rng, long num_bound = 20, long den_bound = 12);

}  // namespace ulat
