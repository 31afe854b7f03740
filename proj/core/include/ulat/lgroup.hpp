#pragma once

#include "ulat/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ulat {

template <LatticeGroup C>
element_t<C> sub(const C& c, const element_t<C>& x, const element_t<C>& y) {
  return c.add(x, c.negate(y));
}

template <LatticeGroup C>
element_t<C> pos_part(const C& c, const element_t<C>& x) {
  return c.join(x, c.zero());
}

template <LatticeGroup C>
element_t<C> neg_part(const C& c, const element_t<C>& x) {
  return c.join(c.negate(x), c.zero());
}

template <LatticeGroup C>
element_t<C> abs_value(const C& c, const element_t<C>& x) {
  return c.join(x, c.negate(x));
}

template <LatticeGroup C>
bool is_positive(const C& c, const element_t<C>& a) {
  return neg_part(c, a) == c.zero();
}

template <class E>
struct SplitDifference {
  E lhs;        // |x - y| ^ a
  E term_low;   // |f_{y-a,y}(x) - f_{y-a,y}(y)|
  E term_high;  // |f_{y,y+a}(x) - f_{y,y+a}(y)|
};

/// Splits the truncated distance |x - y| ^ a into the contributions of the
/// two truncations just below and just above y. `lhs == term_low + term_high`
/// holds in every commutative l-group.
template <LatticeGroup C>
SplitDifference<element_t<C>> l5_decompose(const C& c, const element_t<C>& x, const element_t<C>& y,
                                           const element_t<C>& a) {
  if (!is_positive(c, a)) throw std::invalid_argument("l5_decompose: a must be positive");
  const auto lower = truncation_pair(c, sub(c, y, a), y);
  const auto upper = truncation_pair(c, y, c.add(y, a));
  return {
      c.meet(abs_value(c, sub(c, x, y)), a),
      abs_value(c, sub(c, truncate_f(c, lower, x), truncate_f(c, lower, y))),
      abs_value(c, sub(c, truncate_f(c, upper, x), truncate_f(c, upper, y))),
  };
}

template <LatticeGroup C>
bool l5_identity_holds(const C& c, const SplitDifference<element_t<C>>& s) {
  return s.lhs == c.add(s.term_low, s.term_high);
}

/// |f_{s,s+a}(x) - f_{s,s+a}(y)| <= |x - y| ^ a, checked exactly.
template <LatticeGroup C>
bool l5_left_bound(const C& c, const element_t<C>& s, const element_t<C>& x, const element_t<C>& y,
                   const element_t<C>& a) {
  if (!is_positive(c, a)) throw std::invalid_argument("l5_left_bound: a must be positive");
  const auto p = truncation_pair(c, s, c.add(s, a));
  const auto left = abs_value(c, sub(c, truncate_f(c, p, x), truncate_f(c, p, y)));
  return leq(c, left, c.meet(abs_value(c, sub(c, x, y)), a));
}

/// Group-level laws on one triple: translation invariance of the order and
/// the positive/negative part decomposition.
template <LatticeGroup C>
std::optional<std::string> group_axiom_violation(const C& c, const element_t<C>& x, const element_t<C>& y,
                                                 const element_t<C>& z) {
  if (c.add(x, y) != c.add(y, x)) return "addition commutativity";
  if (c.add(c.add(x, y), z) != c.add(x, c.add(y, z))) return "addition associativity";
  if (c.add(x, c.zero()) != x) return "zero";
  if (c.add(x, c.negate(x)) != c.zero()) return "inverse";
  if (leq(c, x, y) && !leq(c, c.add(x, z), c.add(y, z))) return "translation invariance";
  const auto p = pos_part(c, x);
  const auto n = neg_part(c, x);
  if (sub(c, p, n) != x) return "x = x+ - x-";
  if (c.add(p, n) != abs_value(c, x)) return "|x| = x+ + x-";
  if (c.meet(p, n) != c.zero()) return "x+ ^ x- = 0";
  return std::nullopt;
}

}  // namespace ulat
