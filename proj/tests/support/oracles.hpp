#pragma once

// Reference computations used by the tests. Everything here is written
// against plain integers, bitmasks and rationals, without going through the
// library's lattice code, so that agreement is evidence rather than echo.

#include "ulat/finite_lattice.hpp"
#include "ulat/rat_vec.hpp"
#include "ulat/rational.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using ulat::Rational;

// Subsets of {1..n} as bitmasks. powerset_lattice(n) indexes elements by
// their bitmask, which the tests rely on explicitly.
inline std::uint32_t meet_set(std::uint32_t a, std::uint32_t b) { return a & b; }
inline std::uint32_t join_set(std::uint32_t a, std::uint32_t b) { return a | b; }
inline bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }
inline std::uint32_t trunc_set(std::uint32_t a, std::uint32_t b, std::uint32_t x) { return (x & b) | a; }

inline std::uint32_t mask_of(std::initializer_list<unsigned> members) {
  std::uint32_t m = 0;
  for (unsigned v : members) m |= 1u << (v - 1);
  return m;
}

// Divisors ordered by divisibility: gcd is meet, lcm is join.
inline unsigned long gcd_of(unsigned long a, unsigned long b) { return std::gcd(a, b); }
inline unsigned long lcm_of(unsigned long a, unsigned long b) { return std::lcm(a, b); }

// Numeric value carried by an element name ("12" in divisor60, "3" in chain5).
inline unsigned long value_of(const ulat::FiniteLattice& L, ulat::FiniteLattice::Element e) {
  return std::stoul(L.element_name(e));
}

// Scalar clamp (x ^ b) v a with plain comparisons.
inline Rational clamp(const Rational& a, const Rational& b, const Rational& x) {
  Rational t = x;
  if (b < t) t = b;
  if (t < a) t = a;
  return t;
}

inline Rational absq(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline ulat::RatVec clamp_vec(const ulat::RatVec& a, const ulat::RatVec& b, const ulat::RatVec& x) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(clamp(a[i], b[i], x[i]));
  return ulat::RatVec(std::move(out));
}

inline Rational l1_distance(const ulat::RatVec& x, const ulat::RatVec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += absq(x[i] - y[i]);
  return s;
}

// Seeded rationals with small numerators and denominators, independent of
// ulat::random_rational so test inputs do not share its biases.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Rational any(long num_bound = 30, long den_bound = 9) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return ulat::rat(num(rng_), den(rng_));
  }
  Rational nonnegative(long num_bound = 30, long den_bound = 9) { return absq(any(num_bound, den_bound)); }

  ulat::RatVec vec(std::size_t dim) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim; ++i) c.push_back(any());
    return ulat::RatVec(std::move(c));
  }
  ulat::RatVec nonnegative_vec(std::size_t dim) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim; ++i) c.push_back(nonnegative());
    return ulat::RatVec(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Evaluates sum c_i v^i by Horner's rule.
inline Rational horner(const std::vector<Rational>& coeffs, const Rational& v) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * v + *it;
  return acc;
}

}  // namespace oracle
