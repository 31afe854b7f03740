#pragma once

// Per-carrier oracles for the supremum or infimum of a chain {x_k : k >= start}.
// Periodic descriptors are decided on every carrier (the tail takes finitely
// many values); rational-line descriptors through monotonicity and limits;
// finite/cofinite shapes by set reasoning.

#include "ulat/describe.hpp"
#include "ulat/fincof.hpp"
#include "ulat/lattice.hpp"
#include "ulat/polynomial.hpp"
#include "ulat/sequence.hpp"

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace ulat {

enum class BoundDirection { supremum, infimum };

template <class E>
struct BoundClaim {
  enum class Kind {
    exact,    // `value` is the bound
    absent,   // the bound provably does not exist in the carrier
    unknown,  // no oracle could decide
  } kind = Kind::unknown;
  std::optional<E> value;
  std::string reason;

  static BoundClaim exact(E v, std::string why = {}) { return {Kind::exact, std::move(v), std::move(why)}; }
  static BoundClaim absent(std::string why) { return {Kind::absent, std::nullopt, std::move(why)}; }
  static BoundClaim unknown(std::string why) { return {Kind::unknown, std::nullopt, std::move(why)}; }
};

/// Rational sequences that admit a ParityRational description: symbolic
/// descriptors directly, Periodic descriptors with no prefix and a cycle of
/// length 1 or 2.
std::optional<ParityRational> as_parity_rational(const SequenceFamily<Rational>& seq);

/// Tail bound of a parity-split rational sequence over k >= start.
BoundClaim<Rational> qline_tail_bound(const ParityRational& form, std::size_t start, BoundDirection dir);

/// Bound of a finite list of finite/cofinite sets (always exists).
FinCofBound fincof_bound_oracle(const std::vector<FinCofSet>& chain, BoundDirection dir);

/// Bound of {x_k : k >= start} for a shaped finite/cofinite family. X is
/// uncountable while the sequence names only countably many points, so an
/// increasing chain of initial segments has no supremum and a decreasing
/// chain of their complements has no infimum in the algebra.
FinCofBound fincof_bound_oracle(const FinCofShape& chain, std::size_t start, BoundDirection dir);

/// The filter of all cofinite subsets of X has infimum the empty set.
inline FinCofBound fincof_cofinite_filter_infimum() { return {FinCofBound::Kind::exact, FinCofSet::empty()}; }

template <Lattice C>
BoundClaim<element_t<C>> chain_bound(const C& c, const SequenceFamily<element_t<C>>& chain, std::size_t start,
                                     BoundDirection dir) {
  using E = element_t<C>;
  if (start == 0) start = 1;
  if (const auto* p = chain.periodic()) {
    E acc = p->at(start);
    auto fold = [&](const E& v) { acc = dir == BoundDirection::supremum ? c.join(acc, v) : c.meet(acc, v); };
    for (std::size_t k = start + 1; k <= p->prefix.size(); ++k) fold(p->at(k));
    for (const auto& v : p->cycle) fold(v);
    return BoundClaim<E>::exact(acc, "finitely many tail values");
  }
  if constexpr (std::is_same_v<E, Rational>) {
    if (auto form = as_parity_rational(chain)) return qline_tail_bound(*form, start, dir);
  } else if constexpr (std::is_same_v<E, FinCofSet>) {
    if (const auto* shape = chain.symbolic()) {
      const FinCofBound b = fincof_bound_oracle(*shape, start, dir);
      if (b.kind == FinCofBound::Kind::exact) return BoundClaim<E>::exact(b.value, "set algebra");
      if (b.kind == FinCofBound::Kind::no_bound_in_algebra)
        return BoundClaim<E>::absent("no bound in the finite/cofinite algebra");
      return BoundClaim<E>::unknown("shape is not a chain");
    }
  }
  return BoundClaim<E>::unknown("no bound oracle for '" + chain.name + "' on carrier '" + c.info().name + "'");
}

}  // namespace ulat
