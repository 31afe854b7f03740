#pragma once

// Lattice semimetrics (the class D(L)), families of them, and the derived
// semimetrics d_{a,b}(x, y) = d(f_{a,b}x, f_{a,b}y) that generate u_J and u*.

#include "ulat/describe.hpp"
#include "ulat/ext_value.hpp"
#include "ulat/lattice.hpp"
#include "ulat/lgroup.hpp"
#include "ulat/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ulat {

template <class E>
struct LatticeSemimetric {
  std::string name;
  std::function<ExtValue(const E&, const E&)> evaluate;
  /// Set on derived semimetrics: the pair whose truncation is applied first.
  std::optional<TruncationPair<E>> truncation;
  /// Name of the underlying semimetric (equal to `name` when not derived).
  std::string base;

  ExtValue operator()(const E& x, const E& y) const { return evaluate(x, y); }
};

template <class E, class F>
LatticeSemimetric<E> make_semimetric(std::string name, F fn) {
  LatticeSemimetric<E> d;
  d.base = name;
  d.name = std::move(name);
  d.evaluate = std::move(fn);
  return d;
}

/// Nonempty list of semimetrics over one carrier.
template <class E>
class SemimetricFamily {
 public:
  SemimetricFamily(std::string carrier, std::vector<LatticeSemimetric<E>> members)
      : carrier_(std::move(carrier)), members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("semimetric family over '" + carrier_ + "' is empty");
  }

  const std::string& carrier() const { return carrier_; }
  const std::vector<LatticeSemimetric<E>>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const LatticeSemimetric<E>& operator[](std::size_t i) const { return members_.at(i); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// x and y are indistinguishable: every member vanishes on the pair.
  bool all_zero(const E& x, const E& y) const {
    for (const auto& d : members_)
      if (!d(x, y).is_zero()) return false;
    return true;
  }

 private:
  std::string carrier_;
  std::vector<LatticeSemimetric<E>> members_;
};

// ---------------------------------------------------------------------------
// Standard semimetrics

template <class E>
LatticeSemimetric<E> zero_semimetric() {
  return make_semimetric<E>("zero", [](const E&, const E&) { return ExtValue(); });
}

template <class E>
LatticeSemimetric<E> discrete_semimetric() {
  return make_semimetric<E>("discrete", [](const E& x, const E& y) { return ExtValue(x == y ? 0L : 1L); });
}

/// d(x, y) = norm(|x - y|) for a monotone norm on the positive cone.
template <LatticeGroup C, class Norm>
LatticeSemimetric<element_t<C>> norm_semimetric(const C& c, std::string name, Norm norm) {
  return make_semimetric<element_t<C>>(std::move(name), [c, norm](const element_t<C>& x, const element_t<C>& y) {
    return ExtValue(norm(abs_value(c, sub(c, x, y))));
  });
}

/// d(x, y) = base(h(x), h(y)) for a lattice map h.
template <class E, class Map>
LatticeSemimetric<E> pullback_semimetric(const LatticeSemimetric<E>& base, Map h, std::string name) {
  return make_semimetric<E>(std::move(name), [base, h](const E& x, const E& y) { return base(h(x), h(y)); });
}

// ---------------------------------------------------------------------------
// Axiom checks

/// Semimetric axioms plus the q = 1 contraction laws on one triple.
template <Lattice C>
std::optional<std::string> semimetric_axiom_violation(const C& c, const LatticeSemimetric<element_t<C>>& d,
                                                      const element_t<C>& x, const element_t<C>& y,
                                                      const element_t<C>& z) {
  const ExtValue dxy = d(x, y);
  if (!d(x, x).is_zero()) return "zero diagonal";
  if (dxy != d(y, x)) return "symmetry";
  if (d(x, z) > dxy + d(y, z)) return "triangle inequality";
  if (d(c.join(x, z), c.join(y, z)) > dxy) return "join contraction";
  if (d(c.meet(x, z), c.meet(y, z)) > dxy) return "meet contraction";
  return std::nullopt;
}

struct SampleBudget {
  std::uint64_t seed = 1;
  std::size_t count = 2000;
};

/// Exhaustive over all triples on enumerable carriers (exact), seeded
/// sampling otherwise (verified at `budget.count` triples).
template <Lattice C>
Verdict validate_semimetric(const C& c, const LatticeSemimetric<element_t<C>>& d, SampleBudget budget = {}) {
  auto report = [&](const std::string& law, const element_t<C>& x, const element_t<C>& y, const element_t<C>& z,
                    bool decided) {
    return Verdict::falsified(d.name + ": " + law + " fails at (" + describe(c, x) + ", " + describe(c, y) + ", " +
                                  describe(c, z) + ")",
                              std::nullopt, decided);
  };
  if constexpr (EnumerableLattice<C>) {
    (void)budget;
    const auto all = c.elements();
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& z : all)
          if (auto law = semimetric_axiom_violation(c, d, x, y, z)) return report(*law, x, y, z, true);
    return Verdict::exact(d.name + ": all " + std::to_string(all.size() * all.size() * all.size()) + " triples");
  } else {
    std::mt19937_64 rng(budget.seed);
    for (std::size_t i = 0; i < budget.count; ++i) {
      const auto x = c.sample(rng);
      const auto y = c.sample(rng);
      const auto z = c.sample(rng);
      if (auto law = semimetric_axiom_violation(c, d, x, y, z)) return report(*law, x, y, z, false);
    }
    return Verdict::verified(budget.count, d.name + ": sampled triples");
  }
}

// ---------------------------------------------------------------------------
// Derived semimetrics and u_J

/// d_{a,b}(x, y) = d(f_{a,b}x, f_{a,b}y). On distributive carriers the bound
/// d_{a,b} <= d is re-checked at every evaluation and a violation throws
/// std::logic_error (the input was not a lattice semimetric).
template <Lattice C>
LatticeSemimetric<element_t<C>> derived_semimetric(const C& c, const LatticeSemimetric<element_t<C>>& d,
                                                   const TruncationPair<element_t<C>>& p) {
  using E = element_t<C>;
  if (!p.canonical)
    throw std::invalid_argument("derived_semimetric: pair (" + describe(c, p.a) + ", " + describe(c, p.b) +
                                ") is not canonical");
  const bool check = c.info().distributive;
  LatticeSemimetric<E> out;
  out.name = d.name + "_{" + describe(c, p.a) + "," + describe(c, p.b) + "}";
  out.base = d.base;
  out.truncation = p;
  out.evaluate = [c, d, p, check](const E& x, const E& y) {
    const ExtValue v = d(truncate_f(c, p, x), truncate_f(c, p, y));
    if (check && v > d(x, y))
      throw std::logic_error("derived semimetric exceeds its base; '" + d.name + "' is not a lattice semimetric");
    return v;
  };
  return out;
}

/// {d_{a,b} : d in D, (a, b) in J}
template <Lattice C>
SemimetricFamily<element_t<C>> ustar_family(const C& c, const SemimetricFamily<element_t<C>>& D,
                                            const std::vector<TruncationPair<element_t<C>>>& J) {
  if (J.empty()) throw std::invalid_argument("ustar_family: J is empty");
  std::vector<LatticeSemimetric<element_t<C>>> out;
  out.reserve(D.size() * J.size());
  for (const auto& d : D)
    for (const auto& p : J) out.push_back(derived_semimetric(c, d, p));
  return SemimetricFamily<element_t<C>>(D.carrier(), std::move(out));
}

/// J(S) = {(a, b) in S^2 : a <= b}
template <Lattice C>
std::vector<TruncationPair<element_t<C>>> canonical_pairs(const C& c, const std::vector<element_t<C>>& S) {
  std::vector<TruncationPair<element_t<C>>> out;
  for (const auto& a : S)
    for (const auto& b : S)
      if (leq(c, a, b)) out.push_back(truncation_pair(c, a, b));
  return out;
}

// ---------------------------------------------------------------------------
// Agreement of generated uniformities on an interval of a finite carrier.
//
// On a finite set a finite family generates the uniformity of all supersets
// of its zero set {(x, y) : every d vanishes}, because the least positive
// attained value is a uniform delta. Two families therefore agree iff their
// zero sets coincide.

template <EnumerableLattice C>
Verdict interval_agreement(const C& c, const SemimetricFamily<element_t<C>>& Du,
                           const SemimetricFamily<element_t<C>>& Dv, const TruncationPair<element_t<C>>& p) {
  if (!p.canonical) throw std::invalid_argument("interval_agreement needs a canonical pair");
  std::vector<element_t<C>> interval;
  for (const auto& x : c.elements())
    if (leq(c, p.a, x) && leq(c, x, p.b)) interval.push_back(x);

  // Least positive attained value per family: the delta that realises its
  // zero set as an entourage.
  auto least_positive = [&](const SemimetricFamily<element_t<C>>& D) {
    std::optional<ExtValue> best;
    for (const auto& d : D)
      for (const auto& x : interval)
        for (const auto& y : interval) {
          const ExtValue v = d(x, y);
          if (!v.is_zero() && (!best || v < *best)) best = v;
        }
    return best;
  };

  for (const auto& x : interval)
    for (const auto& y : interval) {
      const bool u0 = Du.all_zero(x, y);
      const bool v0 = Dv.all_zero(x, y);
      if (u0 != v0)
        return Verdict::falsified("(" + describe(c, x) + ", " + describe(c, y) + ") is " +
                                      (u0 ? "indistinguishable under the first family only"
                                          : "indistinguishable under the second family only"),
                                  std::nullopt, true);
    }
  const auto du = least_positive(Du);
  const auto dv = least_positive(Dv);
  return Verdict::exact("interval of " + std::to_string(interval.size()) + " elements; deltas " +
                        (du ? du->str() : std::string("none")) + " / " + (dv ? dv->str() : std::string("none")));
}

// ---------------------------------------------------------------------------
// Lattice polynomials and the two perturbation bounds.

/// Binary tree of meets and joins whose leaves are distinct argument slots.
struct OperatorTree {
  struct Node {
    enum class Kind { leaf, meet, join } kind = Kind::leaf;
    std::size_t left = 0;   // child node ids for meet/join
    std::size_t right = 0;
    std::size_t slot = 0;   // argument index for leaves
  };
  std::vector<Node> nodes;  // root is nodes.back()
  std::size_t arity = 0;

  template <Lattice C, class Args>
  element_t<C> evaluate(const C& c, const Args& args) const {
    return eval(c, args, nodes.size() - 1);
  }

  template <class Rng>
  static OperatorTree random(Rng& rng, unsigned max_depth) {
    OperatorTree t;
    t.grow(rng, max_depth);
    return t;
  }

  unsigned depth() const { return depth_of(nodes.size() - 1); }

 private:
  template <Lattice C, class Args>
  element_t<C> eval(const C& c, const Args& args, std::size_t id) const {
    const Node& n = nodes[id];
    switch (n.kind) {
      case Node::Kind::leaf: return args[n.slot];
      case Node::Kind::meet: return c.meet(eval(c, args, n.left), eval(c, args, n.right));
      case Node::Kind::join: return c.join(eval(c, args, n.left), eval(c, args, n.right));
    }
    throw std::logic_error("bad node");
  }

  unsigned depth_of(std::size_t id) const {
    const Node& n = nodes[id];
    if (n.kind == Node::Kind::leaf) return 0;
    return 1 + std::max(depth_of(n.left), depth_of(n.right));
  }

  template <class Rng>
  std::size_t grow(Rng& rng, unsigned depth) {
    std::uniform_int_distribution<int> pick(0, 2);
    const int k = depth == 0 ? 0 : pick(rng);
    if (k == 0) {
      nodes.push_back(Node{Node::Kind::leaf, 0, 0, arity++});
      return nodes.size() - 1;
    }
    const std::size_t l = grow(rng, depth - 1);
    const std::size_t r = grow(rng, depth - 1);
    nodes.push_back(Node{k == 1 ? Node::Kind::meet : Node::Kind::join, l, r, 0});
    return nodes.size() - 1;
  }
};

/// d(P(x_1..x_n), P(y_1..y_n)) <= sum_i d(x_i, y_i)
template <Lattice C>
bool operator_tree_bound_holds(const C& c, const LatticeSemimetric<element_t<C>>& d, const OperatorTree& t,
                               const std::vector<element_t<C>>& xs, const std::vector<element_t<C>>& ys) {
  if (xs.size() != t.arity || ys.size() != t.arity) throw std::invalid_argument("operator tree arity mismatch");
  ExtValue total;
  for (std::size_t i = 0; i < xs.size(); ++i) total = total + d(xs[i], ys[i]);
  return d(t.evaluate(c, xs), t.evaluate(c, ys)) <= total;
}

/// d(f_{a,b}x, f_{a,b}y) <= d(f_{c,d}x, f_{c,d}y) + 2 d(a,c) + 2 d(b,d)
template <Lattice C>
bool truncation_perturbation_bound_holds(const C& c, const LatticeSemimetric<element_t<C>>& d,
                                         const TruncationPair<element_t<C>>& ab,
                                         const TruncationPair<element_t<C>>& cd, const element_t<C>& x,
                                         const element_t<C>& y) {
  const ExtValue left = d(truncate_f(c, ab, x), truncate_f(c, ab, y));
  const ExtValue right = d(truncate_f(c, cd, x), truncate_f(c, cd, y)) + Rational(2) * d(ab.a, cd.a) +
                         Rational(2) * d(ab.b, cd.b);
  return left <= right;
}

}  // namespace ulat
