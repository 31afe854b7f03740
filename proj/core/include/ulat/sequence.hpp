#pragma once

// Sequences (nets indexed by k = 1, 2, ...) together with optional closed-form
// descriptors that allow exact reasoning about their tails.

#include "ulat/fincof.hpp"
#include "ulat/polynomial.hpp"
#include "ulat/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ulat {

/// x_k = prefix[k-1] for k <= prefix.size(), then cycle repeated forever.
/// Eventually constant sequences have a one-element cycle.
template <class E>
struct Periodic {
  std::vector<E> prefix;
  std::vector<E> cycle;

  const E& at(std::size_t k) const {
    if (k == 0) throw std::out_of_range("sequence indices start at 1");
    if (k <= prefix.size()) return prefix[k - 1];
    return cycle[(k - prefix.size() - 1) % cycle.size()];
  }
  bool eventually_constant() const {
    for (const auto& e : cycle)
      if (!(e == cycle.front())) return false;
    return true;
  }
};

/// Rational sequence given by one rational function on even and another on
/// odd indices; (-1)^k / k is {even: 1/k, odd: -1/k}.
struct ParityRational {
  RationalFunction even;
  RationalFunction odd;

  static ParityRational uniform(const RationalFunction& r) { return {r, r}; }
  static ParityRational alternating_sign() {
    return {RationalFunction::constant(1), RationalFunction::constant(-1)};
  }

  Rational at(std::size_t k) const {
    const Rational x(static_cast<unsigned long>(k));
    return k % 2 == 0 ? even(x) : odd(x);
  }

  friend ParityRational operator+(const ParityRational& a, const ParityRational& b) {
    return {a.even + b.even, a.odd + b.odd};
  }
  friend ParityRational operator-(const ParityRational& a, const ParityRational& b) {
    return {a.even - b.even, a.odd - b.odd};
  }
  friend ParityRational operator*(const ParityRational& a, const ParityRational& b) {
    return {a.even * b.even, a.odd * b.odd};
  }
  friend ParityRational operator/(const ParityRational& a, const ParityRational& b) {
    return {a.even / b.even, a.odd / b.odd};
  }
  friend ParityRational operator-(const ParityRational& a) { return {-a.even, -a.odd}; }
};

/// Index-dependent finite/cofinite sets with n = k + offset:
/// singleton {x_n}, initial segment {x_1..x_n}, or its complement.
struct FinCofShape {
  enum class Kind { singleton, initial_segment, co_initial_segment } kind = Kind::singleton;
  std::int64_t offset = 0;

  FinCofSet at(std::size_t k) const {
    const std::int64_t n = static_cast<std::int64_t>(k) + offset;
    if (n < 0) throw std::out_of_range("FinCofShape: k + offset is negative");
    switch (kind) {
      case Kind::singleton:
        if (n == 0) throw std::out_of_range("FinCofShape: atom index must be positive");
        return FinCofSet::singleton(static_cast<Atom>(n));
      case Kind::initial_segment: return FinCofSet::initial_segment(static_cast<Atom>(n));
      case Kind::co_initial_segment: {
        auto s = FinCofSet::initial_segment(static_cast<Atom>(n));
        s.cofinite = true;
        return s;
      }
    }
    return {};
  }
};

struct NoSymbolicForm {};

template <class E>
struct SymbolicForm {
  using type = NoSymbolicForm;
};
template <>
struct SymbolicForm<Rational> {
  using type = ParityRational;
};
template <>
struct SymbolicForm<FinCofSet> {
  using type = FinCofShape;
};

template <class E>
using Descriptor = std::variant<std::monostate, Periodic<E>, typename SymbolicForm<E>::type>;

/// The net (x_k) restricted to k = 1, 2, ...
template <class E>
struct SequenceFamily {
  std::string name;
  std::function<E(std::size_t)> term;
  Descriptor<E> descriptor;

  E operator()(std::size_t k) const { return term(k); }

  const Periodic<E>* periodic() const { return std::get_if<Periodic<E>>(&descriptor); }
  const typename SymbolicForm<E>::type* symbolic() const {
    return std::get_if<typename SymbolicForm<E>::type>(&descriptor);
  }
  bool has_descriptor() const { return !std::holds_alternative<std::monostate>(descriptor); }
};

template <class E>
SequenceFamily<E> from_function(std::string name, std::function<E(std::size_t)> term) {
  return {std::move(name), std::move(term), std::monostate{}};
}

template <class E>
SequenceFamily<E> periodic_sequence(std::string name, std::vector<E> prefix, std::vector<E> cycle) {
  if (cycle.empty()) throw std::invalid_argument("periodic sequence needs a nonempty cycle");
  Periodic<E> p{std::move(prefix), std::move(cycle)};
  auto term = [p](std::size_t k) { return p.at(k); };
  return {std::move(name), std::move(term), std::move(p)};
}

template <class E>
SequenceFamily<E> constant_sequence(std::string name, E value) {
  return periodic_sequence<E>(std::move(name), {}, {std::move(value)});
}

/// Constant `value` from index `from` on; earlier terms come from `head`.
template <class E>
SequenceFamily<E> eventually_constant(std::string name, std::size_t from, const std::function<E(std::size_t)>& head,
                                      E value) {
  std::vector<E> prefix;
  for (std::size_t k = 1; k < from; ++k) prefix.push_back(head(k));
  return periodic_sequence<E>(std::move(name), std::move(prefix), {std::move(value)});
}

inline SequenceFamily<Rational> rational_sequence(std::string name, ParityRational form) {
  auto term = [form](std::size_t k) { return form.at(k); };
  return {std::move(name), std::move(term), std::move(form)};
}

inline SequenceFamily<FinCofSet> fincof_sequence(std::string name, FinCofShape shape) {
  auto term = [shape](std::size_t k) { return shape.at(k); };
  return {std::move(name), std::move(term), shape};
}

/// Image sequence k -> fn(x_k). Periodic descriptors are carried through;
/// other descriptors are dropped.
template <class E, class F>
SequenceFamily<E> map_sequence(const SequenceFamily<E>& seq, F fn, std::string name) {
  if (const auto* p = seq.periodic()) {
    std::vector<E> prefix, cycle;
    for (const auto& e : p->prefix) prefix.push_back(fn(e));
    for (const auto& e : p->cycle) cycle.push_back(fn(e));
    return periodic_sequence<E>(std::move(name), std::move(prefix), std::move(cycle));
  }
  auto term = [seq, fn](std::size_t k) { return fn(seq(k)); };
  return from_function<E>(std::move(name), std::move(term));
}

/// True iff the descriptor (if any) reproduces `term` for k = 1..upto.
template <class E>
bool descriptor_consistent(const SequenceFamily<E>& seq, std::size_t upto) {
  for (std::size_t k = 1; k <= upto; ++k) {
    if (const auto* p = seq.periodic()) {
      if (!(p->at(k) == seq(k))) return false;
    } else if (const auto* s = seq.symbolic()) {
      if constexpr (!std::is_same_v<typename SymbolicForm<E>::type, NoSymbolicForm>)
        if (!(s->at(k) == seq(k))) return false;
    }
  }
  return true;
}

/// Eventual index K(j) = scale * j + offset of an order witness.
struct AffineIndex {
  std::uint64_t scale = 1;
  std::uint64_t offset = 0;
  std::size_t operator()(std::size_t j) const { return static_cast<std::size_t>(scale * j + offset); }
};

}  // namespace ulat
