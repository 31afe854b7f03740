#pragma once

#include "ulat/lattice.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <vector>

namespace ulat {

/// Atom ids name the points x_1, x_2, ... of an inexhaustible base set X.
using Atom = std::uint64_t;

/// Finite or cofinite subset of X: `atoms` itself, or X minus `atoms`.
struct FinCofSet {
  bool cofinite = false;
  std::set<Atom> atoms;

  static FinCofSet empty() { return {}; }
  static FinCofSet whole() { return {true, {}}; }
  static FinCofSet finite(std::set<Atom> a) { return {false, std::move(a)}; }
  static FinCofSet co(std::set<Atom> a) { return {true, std::move(a)}; }
  static FinCofSet singleton(Atom a) { return {false, {a}}; }
  /// {x_1, ..., x_n}
  static FinCofSet initial_segment(Atom n);

  bool contains(Atom a) const { return cofinite != (atoms.count(a) != 0); }

  friend bool operator==(const FinCofSet&, const FinCofSet&) = default;
};

std::ostream& operator<<(std::ostream& os, const FinCofSet& s);

/// The Boolean algebra of finite and cofinite subsets of X.
class FinCofAlgebra {
 public:
  using Element = FinCofSet;

  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element complement(const Element& x) const { return {!x.cofinite, x.atoms}; }
  Element bottom() const { return FinCofSet::empty(); }
  Element top() const { return FinCofSet::whole(); }

  CarrierInfo info() const { return {"fincof", CarrierKind::symbolic, true, true, false}; }

  template <class Rng>
  Element sample(Rng& rng) const {
    std::bernoulli_distribution flip(0.5);
    std::uniform_int_distribution<Atom> atom(1, 6);
    std::uniform_int_distribution<int> count(0, 3);
    FinCofSet s{flip(rng), {}};
    for (int n = count(rng); n > 0; --n) s.atoms.insert(atom(rng));
    return s;
  }
};

/// Outcome of asking for the supremum or infimum of an enumerated chain.
struct FinCofBound {
  enum class Kind { exact, no_bound_in_algebra, undetermined } kind = Kind::exact;
  FinCofSet value;
};

}  // namespace ulat
