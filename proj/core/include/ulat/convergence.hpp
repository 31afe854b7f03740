#pragma once

// Certificate-based oracles for order convergence (O1, O2, uO) of sequences.
// Witnesses are enumerated chains; the verdict is exact only when every
// sub-claim was decided symbolically or by exhaustion.

#include "ulat/bounds.hpp"
#include "ulat/describe.hpp"
#include "ulat/finite_lattice.hpp"
#include "ulat/lattice.hpp"
#include "ulat/lgroup.hpp"
#include "ulat/sequence.hpp"
#include "ulat/verdict.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace ulat {

inline constexpr std::size_t kDefaultHorizon = 10'000;

template <class E>
struct O1Witness {
  SequenceFamily<E> lower;  // y_k, increasing
  SequenceFamily<E> upper;  // z_k, decreasing
  std::size_t start = 1;
};

/// Which family plays the role of N in an O2 witness.
enum class UpperFamily {
  chain,              // the enumerated chain `upper`
  all_cofinite_sets,  // every cofinite subset of X; `upper` is an enumerated sub-chain
};

template <class E>
struct O2Witness {
  SequenceFamily<E> lower;  // m_j, increasing
  SequenceFamily<E> upper;  // n_j, decreasing
  AffineIndex eventual;     // x_k in [m_j, n_j] for every k >= K(j)
  UpperFamily upper_family = UpperFamily::chain;
};

namespace detail {

inline std::size_t checked_span(std::size_t horizon) { return std::min<std::size_t>(horizon, 64); }

template <class E>
void require_consistent(const SequenceFamily<E>& s, std::size_t horizon) {
  if (!descriptor_consistent(s, checked_span(horizon)))
    throw std::invalid_argument("descriptor of '" + s.name + "' disagrees with its terms");
}

inline std::size_t lcm_of(std::size_t a, std::size_t b) { return std::lcm(a, b); }

/// Compares a bound claim with the expected limit.
template <Lattice C>
Verdict judge_bound(const C& c, const BoundClaim<element_t<C>>& claim, const element_t<C>& x, const std::string& what) {
  using K = typename BoundClaim<element_t<C>>::Kind;
  switch (claim.kind) {
    case K::exact:
      if (*claim.value == x) return Verdict::exact(what + " = " + describe(c, x));
      return Verdict::falsified(what + " is " + describe(c, *claim.value) + ", not " + describe(c, x), std::nullopt,
                                true);
    case K::absent: return Verdict::falsified(what + " does not exist (" + claim.reason + ")", std::nullopt, true);
    case K::unknown: return Verdict::inconclusive(what + ": " + claim.reason);
  }
  return Verdict::inconclusive(what);
}

/// One monotonicity step y_k <= y_{k+1} (increasing) or its dual.
template <Lattice C>
bool step_ok(const C& c, const element_t<C>& a, const element_t<C>& b, bool increasing) {
  return increasing ? leq(c, a, b) : leq(c, b, a);
}

/// Parity-split monotonicity of a rational sequence from `start` on.
inline SignDecision qline_monotone(const ParityRational& f, bool increasing, std::size_t start) {
  using Outcome = SignDecision::Outcome;
  // even k = 2u: f.even(2u) vs f.odd(2u+1); odd k = 2u+1: f.odd(2u+1) vs f.even(2u+2).
  const RationalFunction e0 = f.even.compose_affine(2, 0);
  const RationalFunction o1 = f.odd.compose_affine(2, 1);
  const RationalFunction e2 = f.even.compose_affine(2, 2);
  const long s = static_cast<long>(start);
  const Integer ue((s + 1) / 2 < 1 ? 1 : (s + 1) / 2);  // smallest u with 2u >= start
  const Integer uo(s / 2);                               // smallest u with 2u+1 >= start
  auto first = increasing ? decide_leq_for_all(e0, o1, ue) : decide_leq_for_all(o1, e0, ue);
  if (first.outcome == Outcome::fails && first.counterexample) first.counterexample = 2 * *first.counterexample;
  if (first.outcome != Outcome::holds) return first;
  auto second = increasing ? decide_leq_for_all(o1, e2, uo) : decide_leq_for_all(e2, o1, uo);
  if (second.outcome == Outcome::fails && second.counterexample)
    second.counterexample = 2 * *second.counterexample + 1;
  return second;
}

}  // namespace detail

/// Monotonicity of a chain from `start`: exact from descriptors when possible,
/// otherwise checked up to `horizon`.
template <Lattice C>
Verdict chain_monotone(const C& c, const SequenceFamily<element_t<C>>& chain, bool increasing, std::size_t start,
                       std::size_t horizon) {
  using E = element_t<C>;
  const std::string dir = increasing ? "increasing" : "decreasing";
  auto violation = [&](std::size_t k, bool decided) {
    return Verdict::falsified("'" + chain.name + "' is not " + dir + " at k=" + std::to_string(k), k, decided);
  };
  if (start == 0) start = 1;
  if (const auto* p = chain.periodic()) {
    const std::size_t last = std::max(start, p->prefix.size() + 1) + p->cycle.size();
    for (std::size_t k = start; k < last; ++k)
      if (!detail::step_ok(c, p->at(k), p->at(k + 1), increasing)) return violation(k, true);
    return Verdict::exact("'" + chain.name + "' " + dir + " (periodic)");
  }
  if constexpr (std::is_same_v<E, Rational>) {
    if (const auto* f = chain.symbolic()) {
      const auto d = detail::qline_monotone(*f, increasing, start);
      if (d.outcome == SignDecision::Outcome::holds) return Verdict::exact("'" + chain.name + "' " + dir);
      if (d.outcome == SignDecision::Outcome::fails && d.counterexample && d.counterexample->fits_ulong_p())
        return violation(d.counterexample->get_ui(), true);
    }
  } else if constexpr (std::is_same_v<E, FinCofSet>) {
    if (const auto* s = chain.symbolic()) {
      using K = FinCofShape::Kind;
      if ((s->kind == K::initial_segment && increasing) || (s->kind == K::co_initial_segment && !increasing))
        return Verdict::exact("'" + chain.name + "' " + dir + " (nested segments)");
      return violation(start, true);
    }
  }
  for (std::size_t k = start; k < horizon; ++k)
    if (!detail::step_ok(c, chain(k), chain(k + 1), increasing)) return violation(k, false);
  return Verdict::verified(horizon, "'" + chain.name + "' " + dir);
}

// ---------------------------------------------------------------------------
// O1

/// Checks y_k <= x_k <= z_k with y increasing, z decreasing from `start`, and
/// sup y = inf z = x through the carrier's bound oracle. With periodic
/// descriptors on all three sequences the check is exhaustive.
template <Lattice C>
Verdict verify_O1(const C& c, const SequenceFamily<element_t<C>>& seq, const element_t<C>& x,
                  const O1Witness<element_t<C>>& w, std::size_t horizon = kDefaultHorizon) {
  for (const auto* s : {&seq, &w.lower, &w.upper}) detail::require_consistent(*s, horizon);
  const std::size_t start = std::max<std::size_t>(w.start, 1);

  const auto* px = seq.periodic();
  const auto* py = w.lower.periodic();
  const auto* pz = w.upper.periodic();
  const bool exhaustive = px && py && pz;
  std::size_t last = horizon;
  if (exhaustive) {
    const std::size_t settle = std::max({px->prefix.size(), py->prefix.size(), pz->prefix.size()}) + 1;
    const std::size_t period = detail::lcm_of(px->cycle.size(), detail::lcm_of(py->cycle.size(), pz->cycle.size()));
    last = std::max(start, settle) + period;
  }

  for (std::size_t k = start; k <= last; ++k) {
    const auto xk = seq(k);
    const auto yk = w.lower(k);
    const auto zk = w.upper(k);
    if (!leq(c, yk, xk) || !leq(c, xk, zk))
      return Verdict::falsified("sandwich fails at k=" + std::to_string(k) + ": " + describe(c, yk) + " <= " +
                                    describe(c, xk) + " <= " + describe(c, zk),
                                k, exhaustive);
    if (k < last) {
      if (!leq(c, yk, w.lower(k + 1)))
        return Verdict::falsified("lower witness decreases at k=" + std::to_string(k), k, exhaustive);
      if (!leq(c, w.upper(k + 1), zk))
        return Verdict::falsified("upper witness increases at k=" + std::to_string(k), k, exhaustive);
    }
  }
  Verdict out = exhaustive ? Verdict::exact("exhaustive over one joint period")
                           : Verdict::verified(horizon, "sandwich and monotonicity");
  out = weakest(out, detail::judge_bound(c, chain_bound(c, w.lower, start, BoundDirection::supremum), x, "sup y"));
  out = weakest(out, detail::judge_bound(c, chain_bound(c, w.upper, start, BoundDirection::infimum), x, "inf z"));
  return out;
}

// ---------------------------------------------------------------------------
// O2

namespace detail {

struct ContainmentResult {
  enum class Outcome { holds, fails, unknown } outcome = Outcome::unknown;
  std::size_t j = 0;
  std::size_t k = 0;
  std::string detail;
};

/// For all j >= 1 and all k >= K(j): m_j <= x_k <= n_j, decided from parity
/// descriptors. Splits j and k by parity so the first admissible k is affine
/// in the split index; each parity subsequence of x is monotone, so the tail
/// is bracketed by its first value and its limit.
inline ContainmentResult qline_containment(const ParityRational& x, const ParityRational& m, const ParityRational& n,
                                           AffineIndex K) {
  using Outcome = SignDecision::Outcome;
  using R = ContainmentResult::Outcome;
  const long a = static_cast<long>(K.scale);
  long c0 = static_cast<long>(K.offset);
  if (a + c0 < 1) c0 = 1 - a;  // indices start at 1 anyway
  for (int q = 0; q < 2; ++q) {
    const Integer s0(q == 0 ? 1 : 0);
    const RationalFunction mq = (q == 0 ? m.even : m.odd).compose_affine(2, q);
    const RationalFunction nq = (q == 0 ? n.even : n.odd).compose_affine(2, q);
    for (int p = 0; p < 2; ++p) {
      const long base = a * q + c0;
      const long delta = ((p - base) % 2 + 2) % 2;
      // k_first(s) = 2as + base + delta, u_first(s) = a s + (base + delta - p) / 2
      const long u_off = (base + delta - p) / 2;
      const RationalFunction t = (p == 0 ? x.even : x.odd).compose_affine(2, p);  // value at k = 2u + p
      const Integer u0 = Integer(a) * s0 + u_off;
      bool inc = decide_monotone(t, true, u0).outcome == Outcome::holds;
      bool dec = !inc && decide_monotone(t, false, u0).outcome == Outcome::holds;
      if (!inc && !dec) return {R::unknown, 0, 0, "parity subsequence not monotone"};
      const Limit lim = t.limit_at_infinity();
      if (lim.kind != Limit::Kind::finite) return {R::unknown, 0, 0, "parity subsequence unbounded"};
      const RationalFunction first = t.compose_affine(a, u_off);  // x at k_first(s)
      const RationalFunction limit = RationalFunction::constant(lim.value);
      // Increasing tails are bracketed by [first, limit), decreasing ones by (limit, first].
      const RationalFunction& low = inc ? first : limit;
      const RationalFunction& high = inc ? limit : first;
      for (int side = 0; side < 2; ++side) {
        const auto d = side == 0 ? decide_leq_for_all(mq, low, s0) : decide_leq_for_all(high, nq, s0);
        if (d.outcome == Outcome::holds) continue;
        if (d.outcome == Outcome::unknown || !d.counterexample || !d.counterexample->fits_slong_p())
          return {R::unknown, 0, 0, "sign decision exhausted its budget"};
        const long s = d.counterexample->get_si();
        const std::size_t j = static_cast<std::size_t>(2 * s + q);
        const std::size_t k = static_cast<std::size_t>(2 * a * s + base + delta);
        return {R::fails, j, k, side == 0 ? "tail drops below m_j" : "tail rises above n_j"};
      }
    }
  }
  return {R::holds, 0, 0, "parity-split tail analysis"};
}

/// Finite/cofinite containment for x_k = {x_{k+o}} under constant lower
/// bounds and either the cofinite filter, a co-initial chain, or a constant
/// upper bound.
inline ContainmentResult fincof_containment(const FinCofShape& xs, const SequenceFamily<FinCofSet>& lower,
                                            const SequenceFamily<FinCofSet>& upper, UpperFamily family,
                                            AffineIndex K) {
  using R = ContainmentResult::Outcome;
  if (xs.kind != FinCofShape::Kind::singleton) return {R::unknown, 0, 0, "only singleton sequences"};
  const auto* pl = lower.periodic();
  if (!pl || !pl->prefix.empty() || pl->cycle.size() != 1) return {R::unknown, 0, 0, "lower witness not constant"};
  const std::int64_t o = xs.offset;
  const std::int64_t a = static_cast<std::int64_t>(K.scale);
  const std::int64_t c = static_cast<std::int64_t>(K.offset);
  const FinCofSet& m = pl->cycle.front();
  if (!(m == FinCofSet::empty())) {
    // A nonempty set is below at most one singleton.
    // The first two admissible singletons are distinct, so one of them is not above m.
    const FinCofAlgebra alg;
    const std::size_t k1 = std::max<std::size_t>(K(1), 1);
    const bool below_first = alg.meet(m, xs.at(k1)) == m;
    const std::size_t k = below_first ? k1 + 1 : k1;
    return {R::fails, 1, k, "nonempty lower bound cannot sit below distinct singletons"};
  }
  if (family == UpperFamily::all_cofinite_sets)
    return {R::holds, 0, 0, "every cofinite X\\F contains x_n once n > max F"};
  if (const auto* su = upper.symbolic(); su && su->kind == FinCofShape::Kind::co_initial_segment) {
    // {x_{k+o}} within X \ {x_1..x_{j+p}}  iff  k + o > j + p, needed for k = K(j).
    const std::int64_t p = su->offset;
    // g(j) = K(j) + o - (j + p) must stay positive for every j >= 1.
    const std::int64_t rest = c + o - p;
    if (a >= 1) {
      if (a - 1 + rest > 0) return {R::holds, 0, 0, "K(j) + o exceeds j + p for every j"};
      return {R::fails, 1, K(1), "singleton not removed yet"};
    }
    const std::int64_t j = std::max<std::int64_t>(1, rest);
    return {R::fails, static_cast<std::size_t>(j), K(static_cast<std::size_t>(j)), "singleton not removed yet"};
  }
  if (const auto* pu = upper.periodic(); pu && pu->prefix.empty() && pu->cycle.size() == 1) {
    const FinCofSet& n = pu->cycle.front();
    if (!n.cofinite) return {R::fails, 1, K(1) + n.atoms.size() + 1, "finite upper bound misses later points"};
    const Atom largest = n.atoms.empty() ? 0 : *n.atoms.rbegin();
    const std::int64_t first = static_cast<std::int64_t>(K(1)) + o;
    if (first > static_cast<std::int64_t>(largest)) return {R::holds, 0, 0, "points beyond the excluded set"};
    for (std::int64_t k = static_cast<std::int64_t>(K(1)); k + o <= static_cast<std::int64_t>(largest); ++k)
      if (n.atoms.count(static_cast<Atom>(k + o))) return {R::fails, 1, static_cast<std::size_t>(k), "excluded point"};
    return {R::holds, 0, 0, "points beyond the excluded set"};
  }
  return {R::unknown, 0, 0, "unsupported upper witness"};
}

}  // namespace detail

/// Checks sup M = x and inf N = x through the bound oracles, monotonicity of
/// the witness chains, and x_k in [m_j, n_j] for k >= K(j). Containment is
/// decided exactly for periodic descriptors, parity-split rational
/// descriptors and singleton finite/cofinite shapes, and otherwise checked
/// for all j with K(j) <= horizon: since M increases and N decreases it
/// suffices to test each k against the largest j with K(j) <= k.
template <Lattice C>
Verdict verify_O2(const C& c, const SequenceFamily<element_t<C>>& seq, const element_t<C>& x,
                  const O2Witness<element_t<C>>& w, std::size_t horizon = kDefaultHorizon) {
  using E = element_t<C>;
  using CR = detail::ContainmentResult::Outcome;
  for (const auto* s : {&seq, &w.lower, &w.upper}) detail::require_consistent(*s, horizon);
  if (w.upper_family == UpperFamily::all_cofinite_sets && !std::is_same_v<E, FinCofSet>)
    throw std::invalid_argument("the cofinite filter witness only exists on the finite/cofinite algebra");
  const AffineIndex K = w.eventual;

  Verdict out = Verdict::exact();
  out = weakest(out, chain_monotone(c, w.lower, true, 1, horizon));
  if (w.upper_family == UpperFamily::chain) out = weakest(out, chain_monotone(c, w.upper, false, 1, horizon));
  if (out.is_falsified()) return out;

  out = weakest(out, detail::judge_bound(c, chain_bound(c, w.lower, 1, BoundDirection::supremum), x, "sup M"));
  if (w.upper_family == UpperFamily::chain) {
    out = weakest(out, detail::judge_bound(c, chain_bound(c, w.upper, 1, BoundDirection::infimum), x, "inf N"));
  } else if constexpr (std::is_same_v<E, FinCofSet>) {
    out = weakest(out, detail::judge_bound(c, BoundClaim<E>::exact(fincof_cofinite_filter_infimum().value), x,
                                           "inf of all cofinite sets"));
  }
  if (out.is_falsified()) return out;

  auto failure = [&](std::size_t j, std::size_t k, bool decided, const std::string& why) {
    return Verdict::falsified("x_" + std::to_string(k) + " = " + describe(c, seq(k)) + " outside [m_" +
                                  std::to_string(j) + ", n_" + std::to_string(j) + "]" +
                                  (why.empty() ? "" : " (" + why + ")"),
                              k, decided);
  };

  // Exact routes.
  std::optional<detail::ContainmentResult> symbolic;
  const auto* px = seq.periodic();
  const auto* pm = w.lower.periodic();
  const auto* pn = w.upper.periodic();
  if (px && pm && pn && w.upper_family == UpperFamily::chain) {
    // The tail {x_k : k >= K(j)} and (m_j, n_j) become jointly periodic in j
    // once K(j) passes the prefix of x and j passes the witness prefixes.
    std::size_t settle = std::max(pm->prefix.size(), pn->prefix.size()) + 1;
    if (K.scale > 0)
      while (K(settle) <= px->prefix.size()) ++settle;
    const std::size_t period = detail::lcm_of(pm->cycle.size(), pn->cycle.size());
    for (std::size_t j = 1; j <= settle + period; ++j) {
      const E mj = pm->at(j);
      const E nj = pn->at(j);
      const std::size_t kj = std::max<std::size_t>(K(j), 1);
      const std::size_t k_end = std::max(kj, px->prefix.size() + 1) + px->cycle.size();
      for (std::size_t k = kj; k < k_end; ++k)
        if (!leq(c, mj, px->at(k)) || !leq(c, px->at(k), nj)) return failure(j, k, true, "exhaustive");
    }
    symbolic = detail::ContainmentResult{CR::holds, 0, 0, "exhaustive over one joint period"};
  }
  if constexpr (std::is_same_v<E, Rational>) {
    if (!symbolic) {
      const auto fx = as_parity_rational(seq);
      const auto fm = as_parity_rational(w.lower);
      const auto fn = as_parity_rational(w.upper);
      if (fx && fm && fn) symbolic = detail::qline_containment(*fx, *fm, *fn, K);
    }
  } else if constexpr (std::is_same_v<E, FinCofSet>) {
    if (!symbolic)
      if (const auto* sx = seq.symbolic())
        symbolic = detail::fincof_containment(*sx, w.lower, w.upper, w.upper_family, K);
  }
  if (symbolic && symbolic->outcome == CR::fails) return failure(symbolic->j, symbolic->k, true, symbolic->detail);
  if (symbolic && symbolic->outcome == CR::holds) {
    out.detail = symbolic->detail;
    return out;
  }

  // Horizon check against the enumerated chains.
  std::size_t j = 0;
  for (std::size_t k = 1; k <= horizon; ++k) {
    while (K(j + 1) <= k && j + 1 <= horizon) ++j;
    if (j == 0) continue;
    const E xk = seq(k);
    if (!leq(c, w.lower(j), xk) || !leq(c, xk, w.upper(j))) return failure(j, k, false, "");
  }
  return weakest(out, Verdict::verified(horizon, "containment up to the horizon"));
}

namespace detail {

/// j -> s(j + start - 1), keeping the descriptor so bound oracles still apply.
template <class E>
SequenceFamily<E> shift_sequence(const SequenceFamily<E>& s, std::size_t start) {
  if (start <= 1) return s;
  const std::size_t drop = start - 1;
  if (const auto* p = s.periodic()) {
    std::vector<E> prefix, cycle;
    for (std::size_t k = start; k <= p->prefix.size(); ++k) prefix.push_back(p->at(k));
    const std::size_t first = std::max(start, p->prefix.size() + 1);
    for (std::size_t i = 0; i < p->cycle.size(); ++i) cycle.push_back(p->at(first + i));
    return periodic_sequence<E>(s.name, std::move(prefix), std::move(cycle));
  }
  if constexpr (std::is_same_v<E, Rational>) {
    if (const auto* f = s.symbolic()) {
      const Rational off(static_cast<unsigned long>(drop));
      const RationalFunction even = f->even.compose_affine(1, off);
      const RationalFunction odd = f->odd.compose_affine(1, off);
      // An odd shift swaps which parity of j reads which branch.
      return rational_sequence(s.name, drop % 2 == 0 ? ParityRational{even, odd} : ParityRational{odd, even});
    }
  } else if constexpr (std::is_same_v<E, FinCofSet>) {
    if (const auto* f = s.symbolic())
      return fincof_sequence(s.name, FinCofShape{f->kind, f->offset + static_cast<std::int64_t>(drop)});
  }
  return from_function<E>(s.name, [s, drop](std::size_t j) { return s(j + drop); });
}

}  // namespace detail

/// O2 witness induced by an O1 witness: M = range of y, N = range of z, K(j) = j.
template <class E>
O2Witness<E> o2_from_o1(const O1Witness<E>& w) {
  auto shift = [](const SequenceFamily<E>& s, std::size_t start) { return detail::shift_sequence(s, start); };
  return O2Witness<E>{shift(w.lower, w.start), shift(w.upper, w.start), AffineIndex{1, w.start > 1 ? w.start - 1 : 0},
                      UpperFamily::chain};
}

// ---------------------------------------------------------------------------
// Eventual constancy on carriers where O1 convergence reduces to it.

namespace detail {

template <class C>
Verdict eventual_constancy_impl(const C& c, const SequenceFamily<element_t<C>>& seq, const element_t<C>& x,
                                std::size_t horizon) {
  using E = element_t<C>;
  require_consistent(seq, horizon);
  if (const auto* p = seq.periodic()) {
    const E& v = p->cycle.front();
    for (std::size_t i = 1; i < p->cycle.size(); ++i)
      if (!(p->cycle[i] == v)) {
        const std::size_t k = p->prefix.size() + i;
        return Verdict::falsified("periodic with distinct values " + describe(c, v) + " and " +
                                      describe(c, p->cycle[i]) + "; never constant",
                                  k + 1, true);
      }
    if (!(v == x))
      return Verdict::falsified("eventually constant at " + describe(c, v) + ", not " + describe(c, x),
                                p->prefix.size() + 1, true);
    return Verdict::exact("eventually constant at " + describe(c, v) + " from k=" +
                          std::to_string(p->prefix.size() + 1));
  }
  if constexpr (std::is_same_v<E, FinCofSet>) {
    if (seq.symbolic())
      return Verdict::falsified("consecutive terms differ for every k (strictly monotone or distinct points)", 1,
                                true);
  }
  std::size_t last_change = 0;
  for (std::size_t k = 1; k < horizon; ++k)
    if (!(seq(k) == seq(k + 1))) last_change = k + 1;
  const std::size_t window = horizon / 2;
  if (last_change > window)
    return Verdict::falsified("still changing at k=" + std::to_string(last_change), last_change, false);
  if (!(seq(horizon) == x))
    return Verdict::falsified("settles at " + describe(c, seq(horizon)) + ", not " + describe(c, x), horizon, false);
  return Verdict::verified(horizon, "constant on the second half of the horizon");
}

}  // namespace detail

/// O1 convergence on a finite lattice is eventual constancy: monotone witness
/// sequences in a finite carrier stabilise.
inline Verdict decide_O1_eventual_constancy(const FiniteLattice& c, const SequenceFamily<FiniteLattice::Element>& seq,
                                            FiniteLattice::Element x, std::size_t horizon = kDefaultHorizon) {
  return detail::eventual_constancy_impl(c, seq, x, horizon);
}

/// O1 convergent sequences in the finite/cofinite algebra of an uncountable
/// set are eventually constant.
inline Verdict decide_O1_eventual_constancy(const FinCofAlgebra& c, const SequenceFamily<FinCofSet>& seq,
                                            const FinCofSet& x, std::size_t horizon = kDefaultHorizon) {
  return detail::eventual_constancy_impl(c, seq, x, horizon);
}

// ---------------------------------------------------------------------------
// uO

enum class OrderMode { O1, O2 };

template <class E>
using TruncationWitness = std::variant<O1Witness<E>, O2Witness<E>>;

/// Supplies the order witness for the image sequence f_p(x_k) -> f_p(x).
template <class E>
using WitnessProvider = std::function<TruncationWitness<E>(const TruncationPair<E>&)>;

/// Runs the O1 or O2 oracle on every truncated image; the result is the
/// weakest per-truncation verdict.
template <Lattice C>
Verdict verify_uO(const C& c, const SequenceFamily<element_t<C>>& seq, const element_t<C>& x,
                  const std::vector<TruncationPair<element_t<C>>>& truncations, OrderMode mode,
                  const WitnessProvider<element_t<C>>& witness_for, std::size_t horizon = kDefaultHorizon) {
  using E = element_t<C>;
  if (truncations.empty()) throw std::invalid_argument("verify_uO: empty truncation list");
  Verdict out = Verdict::exact();
  for (const auto& p : truncations) {
    const std::string label = "f_{" + describe(c, p.a) + "," + describe(c, p.b) + "}";
    auto image = map_sequence(seq, [c, p](const E& v) { return truncate_f(c, p, v); }, label + "(" + seq.name + ")");
    const E fx = truncate_f(c, p, x);
    const auto w = witness_for(p);
    Verdict v;
    if (mode == OrderMode::O1) {
      const auto* w1 = std::get_if<O1Witness<E>>(&w);
      if (!w1) throw std::invalid_argument("verify_uO: O1 mode needs O1 witnesses");
      v = verify_O1(c, image, fx, *w1, horizon);
    } else {
      const auto* w2 = std::get_if<O2Witness<E>>(&w);
      if (!w2) throw std::invalid_argument("verify_uO: O2 mode needs O2 witnesses");
      v = verify_O2(c, image, fx, *w2, horizon);
    }
    if (v.witness) v.witness->description = label + ": " + v.witness->description;
    out = weakest(out, v);
    if (out.is_falsified()) return out;
  }
  return out;
}

/// The two truncations (x - a, x) and (x, x + a) attached to a positive a.
template <LatticeGroup C>
std::vector<TruncationPair<element_t<C>>> positive_truncations(const C& c, const element_t<C>& x,
                                                               const std::vector<element_t<C>>& positives) {
  std::vector<TruncationPair<element_t<C>>> out;
  for (const auto& a : positives) {
    if (!is_positive(c, a)) throw std::invalid_argument("verify_uO: " + describe(c, a) + " is not positive");
    out.push_back(truncation_pair(c, sub(c, x, a), x));
    out.push_back(truncation_pair(c, x, c.add(x, a)));
  }
  return out;
}

template <LatticeGroup C>
Verdict verify_uO_positives(const C& c, const SequenceFamily<element_t<C>>& seq, const element_t<C>& x,
                            const std::vector<element_t<C>>& positives, OrderMode mode,
                            const WitnessProvider<element_t<C>>& witness_for,
                            std::size_t horizon = kDefaultHorizon) {
  if (positives.empty()) throw std::invalid_argument("verify_uO: empty list of positives");
  return verify_uO(c, seq, x, positive_truncations(c, x, positives), mode, witness_for, horizon);
}

}  // namespace ulat
