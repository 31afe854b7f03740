#pragma once

// Carrier concepts and the truncation-operator algebra shared by every lattice
// in the library. A carrier is a value type exposing meet/join over its
// nested `Element` type; the order is always derived from meet.

#include <array>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ulat {

enum class CarrierKind { finite_table, symbolic };

struct CarrierInfo {
  std::string name;
  CarrierKind kind = CarrierKind::symbolic;
  bool distributive = false;
  bool bounded = false;
  bool group = false;
};

template <class C>
using element_t = typename C::Element;

template <class C>
concept Lattice = std::equality_comparable<typename C::Element> &&
    requires(const C& c, const typename C::Element& x, const typename C::Element& y) {
      { c.meet(x, y) } -> std::same_as<typename C::Element>;
      { c.join(x, y) } -> std::same_as<typename C::Element>;
      { c.info() } -> std::convertible_to<CarrierInfo>;
    };

/// A lattice whose whole universe can be listed.
template <class C>
concept EnumerableLattice = Lattice<C> && requires(const C& c) {
  { c.elements() } -> std::convertible_to<std::vector<typename C::Element>>;
};

/// Commutative l-group: a lattice with translation-invariant order.
template <class C>
concept LatticeGroup = Lattice<C> &&
    requires(const C& c, const typename C::Element& x, const typename C::Element& y) {
      { c.add(x, y) } -> std::same_as<typename C::Element>;
      { c.negate(x) } -> std::same_as<typename C::Element>;
      { c.zero() } -> std::same_as<typename C::Element>;
    };

/// Carriers that can draw seeded random elements (used for sampled axiom checks).
template <class C, class Rng>
concept Sampleable = Lattice<C> && requires(const C& c, Rng& rng) {
  { c.sample(rng) } -> std::same_as<typename C::Element>;
};

class NotDistributiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Lattice C>
bool leq(const C& c, const element_t<C>& x, const element_t<C>& y) {
  return c.meet(x, y) == x;
}

/// Ordered pair (a, b) housing f_{a,b}. Non-canonical pairs (a not below b)
/// are allowed; `canonical` records whether a <= b.
template <class E>
struct TruncationPair {
  E a;
  E b;
  bool canonical = false;

  friend bool operator==(const TruncationPair&, const TruncationPair&) = default;
};

template <Lattice C>
TruncationPair<element_t<C>> truncation_pair(const C& c, element_t<C> a, element_t<C> b) {
  const bool canonical = leq(c, a, b);
  return TruncationPair<element_t<C>>{std::move(a), std::move(b), canonical};
}

/// f_{a,b}(x) = (x meet b) join a
template <Lattice C>
element_t<C> truncate_f(const C& c, const TruncationPair<element_t<C>>& p, const element_t<C>& x) {
  return c.join(c.meet(x, p.b), p.a);
}

/// g_{a,b}(x) = (x join a) meet b
template <Lattice C>
element_t<C> truncate_g(const C& c, const TruncationPair<element_t<C>>& p, const element_t<C>& x) {
  return c.meet(c.join(x, p.a), p.b);
}

/// f_{a,b} o f_{c,d} = f_{a join (b meet c), b meet d}. Only valid on
/// distributive carriers.
template <Lattice C>
TruncationPair<element_t<C>> compose_truncations(const C& c, const TruncationPair<element_t<C>>& outer,
                                                 const TruncationPair<element_t<C>>& inner) {
  if (!c.info().distributive)
    throw NotDistributiveError("compose_truncations requires a distributive carrier, got '" + c.info().name + "'");
  return truncation_pair(c, c.join(outer.a, c.meet(outer.b, inner.a)), c.meet(outer.b, inner.b));
}

template <class E>
struct DistributivityResult {
  bool distributive = true;
  std::optional<std::array<E, 3>> counterexample;  // x, y, z with x^(y v z) != (x^y) v (x^z)
};

template <EnumerableLattice C>
DistributivityResult<element_t<C>> check_distributive(const C& c) {
  const auto all = c.elements();
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all)
        if (c.meet(x, c.join(y, z)) != c.join(c.meet(x, y), c.meet(x, z)))
          return {false, std::array<element_t<C>, 3>{x, y, z}};
  return {};
}

template <class E>
struct HomomorphismResult {
  bool homomorphism = true;
  std::optional<std::pair<E, E>> counterexample;
  std::string failing_operation;  // "join" or "meet"
};

template <EnumerableLattice C>
HomomorphismResult<element_t<C>> is_truncation_hom(const C& c, const TruncationPair<element_t<C>>& p) {
  const auto all = c.elements();
  for (const auto& x : all) {
    const auto fx = truncate_f(c, p, x);
    for (const auto& y : all) {
      const auto fy = truncate_f(c, p, y);
      if (truncate_f(c, p, c.join(x, y)) != c.join(fx, fy)) return {false, std::pair{x, y}, "join"};
      if (truncate_f(c, p, c.meet(x, y)) != c.meet(fx, fy)) return {false, std::pair{x, y}, "meet"};
    }
  }
  return {};
}

template <class E>
struct TruncationCounterexample {
  TruncationPair<E> pair;
  E x;
  E y;
  std::string failing_operation;
};

/// Searches all pairs (a, b), including non-canonical ones, for a truncation
/// that is not a lattice homomorphism.
template <EnumerableLattice C>
std::optional<TruncationCounterexample<element_t<C>>> find_non_homomorphic_truncation(const C& c) {
  const auto all = c.elements();
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto p = truncation_pair(c, a, b);
      auto r = is_truncation_hom(c, p);
      if (!r.homomorphism)
        return TruncationCounterexample<element_t<C>>{p, r.counterexample->first, r.counterexample->second,
                                                      r.failing_operation};
    }
  return std::nullopt;
}

/// Checks commutativity, associativity, idempotence, absorption and the
/// meet/join order agreement on one triple. Returns the violated law.
template <Lattice C>
std::optional<std::string> lattice_axiom_violation(const C& c, const element_t<C>& x, const element_t<C>& y,
                                                   const element_t<C>& z) {
  if (c.meet(x, y) != c.meet(y, x)) return "meet commutativity";
  if (c.join(x, y) != c.join(y, x)) return "join commutativity";
  if (c.meet(c.meet(x, y), z) != c.meet(x, c.meet(y, z))) return "meet associativity";
  if (c.join(c.join(x, y), z) != c.join(x, c.join(y, z))) return "join associativity";
  if (c.meet(x, x) != x) return "meet idempotence";
  if (c.join(x, x) != x) return "join idempotence";
  if (c.meet(x, c.join(x, y)) != x) return "absorption x^(xvy)";
  if (c.join(x, c.meet(x, y)) != x) return "absorption xv(x^y)";
  if ((c.meet(x, y) == x) != (c.join(x, y) == y)) return "order agreement";
  return std::nullopt;
}

template <EnumerableLattice C>
std::optional<std::string> check_lattice_axioms(const C& c) {
  const auto all = c.elements();
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all)
        if (auto v = lattice_axiom_violation(c, x, y, z)) return v;
  return std::nullopt;
}

template <class C, class Rng>
  requires Sampleable<C, Rng>
std::optional<std::string> check_lattice_axioms_sampled(const C& c, Rng& rng, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const auto x = c.sample(rng);
    const auto y = c.sample(rng);
    const auto z = c.sample(rng);
    if (auto v = lattice_axiom_violation(c, x, y, z)) return v;
  }
  return std::nullopt;
}

}  // namespace ulat
