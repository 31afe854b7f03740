#include "ulat/bounds.hpp"

namespace ulat {

std::optional<ParityRational> as_parity_rational(const SequenceFamily<Rational>& seq) {
  if (const auto* s = seq.symbolic()) return *s;
  if (const auto* p = seq.periodic(); p && p->prefix.empty()) {
    if (p->cycle.size() == 1) return ParityRational::uniform(RationalFunction::constant(p->cycle[0]));
    // k = 1 is odd and picks cycle[0].
    if (p->cycle.size() == 2)
      return ParityRational{RationalFunction::constant(p->cycle[1]), RationalFunction::constant(p->cycle[0])};
  }
  return std::nullopt;
}

BoundClaim<Rational> qline_tail_bound(const ParityRational& form, std::size_t start, BoundDirection dir) {
  using Outcome = SignDecision::Outcome;
  const bool sup = dir == BoundDirection::supremum;
  std::optional<Rational> best;
  for (int parity = 0; parity < 2; ++parity) {
    // k = 2u + parity ranges over the indices >= start of this parity.
    const RationalFunction& r = parity == 0 ? form.even : form.odd;
    const RationalFunction t = r.compose_affine(2, parity);
    const long s = static_cast<long>(start);
    long u0 = (s - parity + 1) / 2;
    if (parity == 0 && u0 < 1) u0 = 1;
    if (u0 < 0) u0 = 0;
    const Integer from(u0);
    const bool inc = decide_monotone(t, true, from).outcome == Outcome::holds;
    const bool dec = !inc && decide_monotone(t, false, from).outcome == Outcome::holds;
    if (!inc && !dec)
      return BoundClaim<Rational>::unknown("parity " + std::to_string(parity) + " subsequence is not monotone");
    const Rational first = t(Rational(from));
    const Limit lim = t.limit_at_infinity();
    std::optional<Rational> candidate;
    if (sup == inc) {
      // The bound in this direction is the limit.
      if (lim.kind != Limit::Kind::finite) return BoundClaim<Rational>::absent("subsequence is unbounded");
      candidate = lim.value;
    } else {
      candidate = first;
    }
    if (!best || (sup ? *candidate > *best : *candidate < *best)) best = candidate;
  }
  return BoundClaim<Rational>::exact(*best, "monotone parity subsequences");
}

FinCofBound fincof_bound_oracle(const std::vector<FinCofSet>& chain, BoundDirection dir) {
  FinCofAlgebra alg;
  if (chain.empty())
    return {FinCofBound::Kind::exact, dir == BoundDirection::supremum ? alg.bottom() : alg.top()};
  FinCofSet acc = chain.front();
  for (const auto& s : chain) acc = dir == BoundDirection::supremum ? alg.join(acc, s) : alg.meet(acc, s);
  return {FinCofBound::Kind::exact, acc};
}

FinCofBound fincof_bound_oracle(const FinCofShape& shape, std::size_t start, BoundDirection dir) {
  using Kind = FinCofShape::Kind;
  if (start == 0) start = 1;
  const bool sup = dir == BoundDirection::supremum;
  switch (shape.kind) {
    case Kind::initial_segment:
      // Increasing: the infimum is the first term; upper bounds are cofinite
      // sets avoiding an uncountable remainder of X and have no least one.
      if (!sup) return {FinCofBound::Kind::exact, shape.at(start)};
      return {FinCofBound::Kind::no_bound_in_algebra, {}};
    case Kind::co_initial_segment:
      // Decreasing: the supremum is the first term; each point of X outside
      // the sequence gives a lower bound, and no greatest one exists.
      if (sup) return {FinCofBound::Kind::exact, shape.at(start)};
      return {FinCofBound::Kind::no_bound_in_algebra, {}};
    case Kind::singleton:
      // Distinct singletons meet in the empty set; no finite or cofinite set
      // is a least upper bound of infinitely many points.
      if (!sup) return {FinCofBound::Kind::exact, FinCofSet::empty()};
      return {FinCofBound::Kind::no_bound_in_algebra, {}};
  }
  return {FinCofBound::Kind::undetermined, {}};
}

}  // namespace ulat
