#include "ulat/lab/suites.hpp"

#include "ulat/catalog.hpp"
#include "ulat/convergence.hpp"
#include "ulat/expr.hpp"
#include "ulat/kernel.hpp"
#include "ulat/lattice.hpp"
#include "ulat/lgroup.hpp"
#include "ulat/metric.hpp"
#include "ulat/real_entourage.hpp"
#include "ulat/semimetric.hpp"
#include "ulat/separation.hpp"
#include "ulat/subnet.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace ulat::lab {

namespace {

using Checks = std::vector<CheckRecord>;

template <class C>
std::string pair_text(const C& c, const TruncationPair<element_t<C>>& p) {
  return "(" + describe(c, p.a) + ", " + describe(c, p.b) + ")";
}

// Counts cases and remembers the first failure of a loop of exact checks.
struct Tally {
  std::uint64_t cases = 0;
  std::optional<std::string> first_failure;

  void record(bool ok, const std::function<std::string()>& witness) {
    ++cases;
    if (!ok && !first_failure) first_failure = witness();
  }
  CheckRecord as_check(std::string name, bool exhaustive) const {
    if (first_failure) return check_from_verdict(std::move(name), Verdict::falsified(*first_failure, cases, true), cases);
    return check_from_verdict(std::move(name),
                              exhaustive ? Verdict::exact() : Verdict::verified(cases, "seeded sample"), cases);
  }
};

// ---------------------------------------------------------------------------

Checks suite_lemma_l5(const SuiteConfig& cfg) {
  Checks out;
  const RationalVectors G(5);
  std::mt19937_64 rng(cfg.seed);
  Tally identity, bound;
  for (int i = 0; i < 10'000; ++i) {
    const auto x = G.sample(rng);
    const auto y = G.sample(rng);
    const auto a = G.sample_positive(rng);
    const auto s = G.sample(rng);
    const auto split = l5_decompose(G, x, y, a);
    identity.record(l5_identity_holds(G, split), [&] {
      std::ostringstream os;
      os << "x=" << x << " y=" << y << " a=" << a;
      return os.str();
    });
    bound.record(l5_left_bound(G, s, x, y, a), [&] {
      std::ostringstream os;
      os << "s=" << s << " x=" << x << " y=" << y << " a=" << a;
      return os.str();
    });
  }
  // Exact identities on sampled inputs: "exact" per case, the sweep itself is a sample.
  out.push_back(identity.as_check("split identity on Q^5 (seeded)", false));
  out.push_back(bound.as_check("left bound on Q^5 (seeded)", false));

  const RationalVectors G2(2);
  const auto r = l5_decompose(G2, RatVec{3, -1}, RatVec{1, 2}, RatVec{2, 2});
  const bool worked = r.lhs == RatVec{2, 2} && r.term_low == RatVec{0, 2} && r.term_high == RatVec{2, 0};
  out.push_back(check_from_verdict("worked example in Q^2",
                                   worked ? Verdict::exact() : Verdict::falsified("unexpected split", std::nullopt, true),
                                   1));
  return out;
}

// ---------------------------------------------------------------------------

template <class C>
CheckRecord composition_law(const C& L) {
  const auto all = L.elements();
  Tally t;
  for (auto a : all)
    for (auto b : all) {
      const auto p1 = truncation_pair(L, a, b);
      for (auto c : all)
        for (auto d : all) {
          const auto p2 = truncation_pair(L, c, d);
          const auto composed = compose_truncations(L, p1, p2);
          for (auto x : all)
            t.record(truncate_f(L, p1, truncate_f(L, p2, x)) == truncate_f(L, composed, x), [&] {
              return "f" + pair_text(L, p1) + " o f" + pair_text(L, p2) + " differs from f" + pair_text(L, composed) +
                     " at " + describe(L, x);
            });
        }
    }
  return t.as_check("composition law on " + L.name() + " (all a,b,c,d,x)", true);
}

template <class C>
CheckRecord interval_nesting(const C& L) {
  const auto all = L.elements();
  Tally t;
  for (auto a : all)
    for (auto c : all)
      for (auto d : all)
        for (auto b : all) {
          if (!(leq(L, a, c) && leq(L, c, d) && leq(L, d, b))) continue;
          const auto outer = truncation_pair(L, a, b);
          const auto inner = truncation_pair(L, c, d);
          for (auto x : all)
            t.record(truncate_f(L, inner, truncate_f(L, outer, x)) == truncate_f(L, inner, x), [&] {
              return "nesting fails for " + pair_text(L, inner) + " inside " + pair_text(L, outer) + " at " +
                     describe(L, x);
            });
        }
  return t.as_check("nested intervals on " + L.name(), true);
}

Checks suite_prop_p1(const SuiteConfig&) {
  Checks out;
  const auto p3 = powerset_lattice(3);
  const auto d60 = divisor_lattice(60);
  out.push_back(composition_law(p3));
  out.push_back(composition_law(d60));
  out.push_back(interval_nesting(p3));
  out.push_back(interval_nesting(d60));
  // Idempotence on canonical pairs.
  Tally idem;
  for (auto a : p3.elements())
    for (auto b : p3.elements()) {
      const auto p = truncation_pair(p3, a, b);
      if (!p.canonical) continue;
      idem.record(compose_truncations(p3, p, p) == p, [&] { return "f" + pair_text(p3, p) + " is not idempotent"; });
    }
  out.push_back(idem.as_check("idempotence of canonical truncations on powerset3", true));
  // The law is only claimed for distributive carriers; the API must refuse N5.
  const auto n5 = pentagon_lattice();
  Verdict refused = Verdict::falsified("compose_truncations accepted the nondistributive carrier n5", std::nullopt, true);
  try {
    (void)compose_truncations(n5, truncation_pair(n5, n5.at("0"), n5.at("1")),
                              truncation_pair(n5, n5.at("a"), n5.at("1")));
  } catch (const NotDistributiveError&) {
    refused = Verdict::exact("rejected");
  }
  out.push_back(check_from_verdict("nondistributive carrier rejected", refused, 1));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_prop_d(const SuiteConfig&) {
  Checks out;
  std::vector<FiniteLattice> distributive = {powerset_lattice(3), divisor_lattice(60)};
  for (unsigned n = 2; n <= 5; ++n) distributive.push_back(chain_lattice(n));
  for (const auto& L : distributive) {
    const auto dist = check_distributive(L);
    const auto cex = find_non_homomorphic_truncation(L);
    const std::uint64_t pairs = L.size() * L.size();
    Verdict v = Verdict::exact();
    if (!dist.distributive) v = Verdict::falsified(L.name() + " failed the distributivity scan", std::nullopt, true);
    else if (cex)
      v = Verdict::falsified("f" + pair_text(L, cex->pair) + " breaks " + cex->failing_operation + " at (" +
                                 describe(L, cex->x) + ", " + describe(L, cex->y) + ")",
                             std::nullopt, true);
    out.push_back(check_from_verdict("every truncation is a homomorphism on " + L.name(), v, pairs));
  }
  for (const auto& L : {pentagon_lattice(), diamond_lattice()}) {
    const auto dist = check_distributive(L);
    Verdict dv = Verdict::exact("distributive");
    if (!dist.distributive) {
      const auto& t = *dist.counterexample;
      dv = Verdict::falsified("x=" + describe(L, t[0]) + ", y=" + describe(L, t[1]) + ", z=" + describe(L, t[2]),
                              std::nullopt, true);
    }
    out.push_back(expect_counterexample("distributive law fails on " + L.name(), dv, L.size() * L.size() * L.size()));
    const auto cex = find_non_homomorphic_truncation(L);
    Verdict hv = Verdict::exact("all truncations are homomorphisms");
    if (cex)
      hv = Verdict::falsified("(a, b) = " + pair_text(L, cex->pair) + ", (x, y) = (" + describe(L, cex->x) + ", " +
                                  describe(L, cex->y) + "), " + cex->failing_operation + " not preserved",
                              std::nullopt, true);
    out.push_back(expect_counterexample("non-homomorphic truncation on " + L.name(), hv, L.size() * L.size()));
  }
  // Dichotomy across the whole finite catalog.
  Tally dich;
  for (const auto& e : finite_catalog()) {
    const bool dist = check_distributive(e.lattice).distributive;
    const bool homs = !find_non_homomorphic_truncation(e.lattice).has_value();
    dich.record(dist == homs && dist == e.lattice.info().distributive,
                [&] { return e.lattice.name() + ": distributivity and homomorphism scans disagree"; });
  }
  out.push_back(dich.as_check("distributive iff all truncations are homomorphisms (catalog)", true));
  // g_{a,b} = f_{a,b} for a <= b on distributive carriers.
  Tally gf;
  for (const auto& L : distributive)
    for (auto a : L.elements())
      for (auto b : L.elements()) {
        const auto p = truncation_pair(L, a, b);
        if (!p.canonical) continue;
        for (auto x : L.elements())
          gf.record(truncate_g(L, p, x) == truncate_f(L, p, x),
                    [&] { return L.name() + ": g" + pair_text(L, p) + " != f at " + describe(L, x); });
      }
  out.push_back(gf.as_check("g = f for canonical pairs on distributive carriers", true));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_lemma_l2(const SuiteConfig& cfg) {
  Checks out;
  const RationalVectors G(3);
  const auto d = l1_semimetric(G);
  std::mt19937_64 rng(cfg.seed);
  Tally trees, perturb;
  unsigned max_depth_seen = 0;
  for (int i = 0; i < 1'000; ++i) {
    const auto t = OperatorTree::random(rng, 5);
    max_depth_seen = std::max(max_depth_seen, t.depth());
    std::vector<RatVec> xs, ys;
    for (std::size_t s = 0; s < t.arity; ++s) {
      xs.push_back(G.sample(rng));
      ys.push_back(G.sample(rng));
    }
    trees.record(operator_tree_bound_holds(G, d, t, xs, ys),
                 [&] { return "tree #" + std::to_string(i) + " of depth " + std::to_string(t.depth()); });
  }
  for (int i = 0; i < 1'000; ++i) {
    const auto ab = truncation_pair(G, G.sample(rng), G.sample(rng));
    const auto cd = truncation_pair(G, G.sample(rng), G.sample(rng));
    const auto x = G.sample(rng);
    const auto y = G.sample(rng);
    perturb.record(truncation_perturbation_bound_holds(G, d, ab, cd, x, y), [&] {
      std::ostringstream os;
      os << "(a,b)=(" << ab.a << ", " << ab.b << ") (c,d)=(" << cd.a << ", " << cd.b << ") x=" << x << " y=" << y;
      return os.str();
    });
  }
  out.push_back(trees.as_check("lattice polynomial bound, depth <= 5 (max seen " + std::to_string(max_depth_seen) + ")",
                               false));
  out.push_back(perturb.as_check("truncation perturbation bound", false));
  return out;
}

// ---------------------------------------------------------------------------

FiniteLattice four_chain() {
  return FiniteLattice::from_covers("chain0ab1", {"0", "a", "b", "1"}, {{0, 1}, {1, 2}, {2, 3}});
}

/// Discrete metric seen through the order-preserving map that sends b to a.
LatticeSemimetric<FiniteElement> collapse_ab(const FiniteLattice& L) {
  const auto a = L.at("a");
  const auto b = L.at("b");
  return pullback_semimetric(discrete_semimetric<FiniteElement>(),
                             [a, b](FiniteElement x) { return x == b ? a : x; }, "collapse{a,b}");
}

Checks suite_prop_q(const SuiteConfig&) {
  Checks out;
  Tally t;
  for (const auto& e : finite_catalog())
    for (const auto& f : e.families) {
      const std::string label = e.lattice.name() + "/" + f.name;
      try {
        const auto k = kernel_partition(e.lattice, f.family);
        const auto q = quotient(e.lattice, k, f.family);
        const auto induced = zero_distance_classes(q.carrier, q.family);
        const bool axioms = !check_lattice_axioms(q.carrier).has_value();
        bool projection_hom = true;
        for (auto x : e.lattice.elements())
          for (auto y : e.lattice.elements())
            projection_hom = projection_hom && q.project(e.lattice.join(x, y)) == q.carrier.join(q.project(x), q.project(y)) &&
                             q.project(e.lattice.meet(x, y)) == q.carrier.meet(q.project(x), q.project(y));
        t.record(induced.discrete() && axioms && projection_hom, [&] {
          return label + ": quotient " + (induced.discrete() ? "" : "not Hausdorff ") +
                 (axioms ? "" : "violates lattice axioms ") + (projection_hom ? "" : "projection not a homomorphism");
        });
      } catch (const std::exception& ex) {
        t.record(false, [&] { return label + ": " + ex.what(); });
      }
    }
  out.push_back(t.as_check("kernel congruence and Hausdorff quotient on every catalog family", true));

  const auto L = four_chain();
  const FiniteFamily D(L.name(), {collapse_ab(L)});
  Verdict v = Verdict::exact("{{0},{a,b},{1}} -> 3-chain");
  try {
    const auto k = kernel_partition(L, D);
    const auto q = quotient(L, k, D);
    const bool ok = k.classes.size() == 3 && k.same_class(L.at("a"), L.at("b")) && q.carrier.size() == 3 &&
                    q.carrier.info().distributive && zero_distance_classes(q.carrier, q.family).discrete() &&
                    q.carrier.covers().size() == 2;
    if (!ok) v = Verdict::falsified("unexpected kernel or quotient for the collapsed 4-chain", std::nullopt, true);
  } catch (const std::exception& ex) {
    v = Verdict::falsified(ex.what(), std::nullopt, true);
  }
  out.push_back(check_from_verdict("4-chain with a ~ b collapses to a 3-chain", v, 1));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_prop_ph(const SuiteConfig&) {
  Checks out;
  Tally t;
  std::uint64_t hausdorff_instances = 0;
  for (const auto& e : finite_catalog()) {
    if (e.lattice.size() > 8) continue;
    const auto subs = enumerate_sublattices(e.lattice);
    for (const auto& f : e.families)
      for (const auto& S : subs) {
        const auto r = ph_criterion(e.lattice, S, f.family);
        if (r.criterion) ++hausdorff_instances;
        t.record(r.agree(), [&] {
          std::string s;
          for (auto x : S) s += (s.empty() ? "" : ",") + e.lattice.element_name(x);
          return e.lattice.name() + "/" + f.name + ", S={" + s + "}: criterion " + (r.criterion ? "true" : "false") +
                 " but kernel " + (r.kernel_hausdorff ? "Hausdorff" : "not Hausdorff");
        });
      }
  }
  auto rec = t.as_check("criterion agrees with the kernel of u_J(S), all sublattices (<= 8 elements)", true);
  rec.verdict += "; " + std::to_string(hausdorff_instances) + " Hausdorff instances";
  out.push_back(rec);

  // Hausdorff iff u* Hausdorff (S = L).
  Tally c1;
  for (const auto& e : finite_catalog())
    for (const auto& f : e.families) {
      const auto r = ph_criterion(e.lattice, e.lattice.elements(), f.family);
      const bool u_hausdorff = zero_distance_classes(e.lattice, f.family).discrete();
      c1.record(r.kernel_hausdorff == u_hausdorff,
                [&] { return e.lattice.name() + "/" + f.name + ": u and u* disagree on Hausdorffness"; });
    }
  out.push_back(c1.as_check("u Hausdorff iff u* Hausdorff (catalog)", true));

  const auto c3 = chain_lattice(3);
  const FiniteFamily disc(c3.name(), {discrete_semimetric<FiniteElement>()});
  const auto r = ph_criterion(c3, {c3.at("0"), c3.at("2")}, disc);
  out.push_back(check_from_verdict(
      "chain3 with S = {0, 2}",
      r.criterion && r.kernel_hausdorff ? Verdict::exact()
                                        : Verdict::falsified("expected a Hausdorff u_J(S)", std::nullopt, true),
      1));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_ex_r(const SuiteConfig& cfg) {
  Checks out;
  Verdict comp = Verdict::exact();
  std::uint64_t cases = 0;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    comp = weakest(comp, real_entourage_compose_check(n, cfg.seed + n, 10'000));
    cases += 9 + 10'000;
    if (comp.is_falsified()) break;
  }
  out.push_back(check_from_verdict("U_2n o U_2n within U_n, n = 1..64", comp, cases));
  out.push_back(expect_counterexample("U_2 o U_2 is not within U_2", entourage_composition_check(2, 2, cfg.seed, 1'000),
                                      9));

  const RationalLine Q;
  const auto ramp = rational_sequence("k", ParityRational::uniform(RationalFunction::variable()));
  const SemimetricFamily<Rational> absfam("qline", {abs_semimetric()});
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= 8; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  const auto ustar = ustar_family(Q, absfam, J);
  out.push_back(check_from_verdict("x_k = k is u*-Cauchy (clamping)",
                                   metric_cauchy<Rational>(ramp, ustar, std::nullopt, cfg.effective_eps_grid(), cfg.horizon),
                                   J.size()));
  out.push_back(check_from_verdict("x_k = k is Cauchy for the U_n base", ramp_ustar_cauchy(64), 64));
  out.push_back(expect_counterexample(
      "x_k = k is not |.|-Cauchy",
      metric_cauchy<Rational>(ramp, absfam, std::nullopt, cfg.effective_eps_grid(), cfg.horizon), 1));

  std::vector<Rational> limits = {Rational(0), Rational(100), rat(-7, 2)};
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < 100; ++i) limits.push_back(random_rational(rng, 1000, 50));
  Verdict nc = Verdict::exact();
  for (const auto& r : limits) {
    Verdict v = ustar_nonconvergence_on_line(r);
    if (v.status != Status::exact && v.witness) v.witness->description = "r=" + ulat::to_string(r) + ": " + v.witness->description;
    if (v.status != Status::exact && !v.witness) v = Verdict::falsified("r=" + ulat::to_string(r) + ": " + v.detail);
    nc = weakest(nc, v);
  }
  out.push_back(check_from_verdict("x_k = k does not converge to r (103 limits)", nc, limits.size()));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_ex(const SuiteConfig&) {
  Checks out;
  const auto rep = unbounded_separation_example(50, 200);
  out.push_back(check_from_verdict("truncated norm difference <= k/n, k <= 50, n <= 200", rep.truncated, rep.cases));
  out.push_back(expect_counterexample("|x_n - x| ^ a has infinite norm", rep.unclamped, rep.cases));
  const auto big = unbounded_separation(50, 10'000);
  out.push_back(check_from_verdict(
      "k = 50, n = 10^4",
      big.within_bound() && big.bound == rat(1, 200) && big.unclamped.is_infinite()
          ? Verdict::exact()
          : Verdict::falsified("difference " + ulat::to_string(big.truncated_difference) + ", norm " + big.unclamped.str(),
                               std::nullopt, true),
      1));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_o1o2(const SuiteConfig& cfg) {
  Checks out;
  const FinCofAlgebra A;
  const auto seq = fincof_sequence("{x_k}", {FinCofShape::Kind::singleton, 0});
  const auto lower = constant_sequence<FinCofSet>("{}", FinCofSet::empty());
  const auto chain = fincof_sequence("X \\ {x_1..x_j}", {FinCofShape::Kind::co_initial_segment, 0});
  const O2Witness<FinCofSet> canonical{lower, chain, AffineIndex{1, 1}, UpperFamily::all_cofinite_sets};
  out.push_back(check_from_verdict("O2 with M = {empty}, N = all cofinite sets",
                                   verify_O2(A, seq, FinCofSet::empty(), canonical, cfg.horizon), 1));
  out.push_back(expect_counterexample("not eventually constant, hence not O1",
                                      decide_O1_eventual_constancy(A, seq, FinCofSet::empty(), cfg.horizon), 1));
  // The enumerated sub-chain N_j alone has no infimum in the algebra.
  const O2Witness<FinCofSet> enumerated{lower, chain, AffineIndex{1, 1}, UpperFamily::chain};
  out.push_back(expect_counterexample("enumerated chain X \\ {x_1..x_j} has no infimum",
                                      verify_O2(A, seq, FinCofSet::empty(), enumerated, cfg.horizon), 1));
  // Containment itself still holds along the enumerated chain.
  Tally contain;
  const std::size_t h = std::min<std::size_t>(cfg.horizon, 400);
  for (std::size_t j = 1; j <= h; ++j)
    for (std::size_t k = j + 1; k <= h; ++k)
      contain.record(leq(A, seq(k), chain(j)), [&] {
        return "x_" + std::to_string(k) + " not in N_" + std::to_string(j);
      });
  out.push_back(contain.as_check("{x_k} within N_j for k > j (enumerated)", true));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_subnet_t3(const SuiteConfig&) {
  Checks out;
  const RationalLine Q;
  const auto seq = parse_rational_sequence("(-1)^k/k");
  const auto lower = parse_rational_sequence("-1/k");
  const auto upper = parse_rational_sequence("1/k");
  const std::vector<TruncationPair<Rational>> F = {truncation_pair(Q, Rational(-1), Rational(1))};
  const std::vector<O2Witness<Rational>> W = {{lower, upper, AffineIndex{1, 1}, UpperFamily::chain}};
  try {
    const auto e = build_subnet(Q, seq, F, W, 100);
    out.push_back(check_from_verdict("rational line, x_k = (-1)^k/k, 100 steps", check_subnet_invariants(Q, e), 100));
  } catch (const SubnetError& ex) {
    out.push_back(check_from_verdict("rational line, x_k = (-1)^k/k, 100 steps",
                                     Verdict::falsified(ex.what(), ex.k(), true), 100));
  }

  const FinCofAlgebra A;
  const auto sets = fincof_sequence("{x_k}", {FinCofShape::Kind::singleton, 0});
  const FinCofSet B = FinCofSet::co({2, 5});
  const std::vector<TruncationPair<FinCofSet>> G = {truncation_pair(A, FinCofSet::empty(), B)};
  // f(x_k) is {x_k} except at k = 2, 5 where it is empty; either way it sits in X \ {x_1..x_j} once k > j.
  const auto m = constant_sequence<FinCofSet>("{}", FinCofSet::empty());
  const auto n = fincof_sequence("X \\ {x_1..x_j}", {FinCofShape::Kind::co_initial_segment, 0});
  const std::vector<O2Witness<FinCofSet>> V = {{m, n, AffineIndex{1, 1}, UpperFamily::chain}};
  try {
    const auto e = build_subnet(A, sets, G, V, 100);
    out.push_back(check_from_verdict("finite/cofinite, A_k = {x_k}, B = X \\ {x_2, x_5}, 100 steps",
                                     check_subnet_invariants(A, e), 100));
  } catch (const SubnetError& ex) {
    out.push_back(check_from_verdict("finite/cofinite, A_k = {x_k}, B = X \\ {x_2, x_5}, 100 steps",
                                     Verdict::falsified(ex.what(), ex.k(), true), 100));
  }

  const auto constant = constant_sequence<Rational>("3", Rational(3));
  const auto c3 = constant_sequence<Rational>("3", Rational(3));
  const std::vector<TruncationPair<Rational>> F2 = {truncation_pair(Q, Rational(0), Rational(5)),
                                                    truncation_pair(Q, Rational(-2), Rational(1))};
  const auto one = constant_sequence<Rational>("1", Rational(1));
  const std::vector<O2Witness<Rational>> W2 = {{c3, c3, AffineIndex{1, 0}, UpperFamily::chain},
                                               {one, one, AffineIndex{1, 0}, UpperFamily::chain}};
  const auto e2 = build_subnet(Q, constant, F2, W2, 50);
  bool identity_phi = true;
  for (std::size_t i = 0; i < e2.steps.size(); ++i) identity_phi = identity_phi && e2.steps[i].phi == i + 1;
  Verdict cv = check_subnet_invariants(Q, e2);
  if (!identity_phi) cv = Verdict::falsified("phi is not the identity on a constant sequence", std::nullopt, true);
  out.push_back(check_from_verdict("constant sequence, two truncations", cv, 50));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_exhaustive_t2(const SuiteConfig& cfg) {
  Checks out;
  const RationalLine Q;
  const auto grid = cfg.effective_eps_grid();
  const auto ramp = rational_sequence("k", ParityRational::uniform(RationalFunction::variable()));
  const SemimetricFamily<Rational> absfam("qline", {abs_semimetric()});
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= 8; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  const auto ustar = ustar_family(Q, absfam, J);
  out.push_back(expect_counterexample("|.| is not exhaustive: x_k = k is not Cauchy",
                                      exhaustivity_probe<RationalLine>(Q, ramp, absfam, std::nullopt, grid, cfg.horizon), 1));
  out.push_back(check_from_verdict("u* family: x_k = k is Cauchy",
                                   exhaustivity_probe<RationalLine>(Q, ramp, ustar, std::nullopt, grid, cfg.horizon),
                                   J.size()));
  const auto bounded = parse_rational_sequence("1 - 1/k");
  const MetricCertificate<Rational> cert{[](const Rational& eps, const LatticeSemimetric<Rational>&) {
    return static_cast<std::size_t>(ceil_of(Rational(2 / eps)).get_ui());
  }};
  out.push_back(check_from_verdict("bounded monotone 1 - 1/k is |.|-Cauchy",
                                   exhaustivity_probe<RationalLine>(Q, bounded, absfam, cert, grid, cfg.horizon), grid.size()));

  // On finite carriers every uniformity is exhaustive, and u* = u: both the
  // full u* family and the single truncation (bottom, top) agree with D.
  Tally full, collapse;
  for (const auto& e : finite_catalog()) {
    const auto& L = e.lattice;
    for (const auto& f : e.families) {
      const std::string label = L.name() + "/" + f.name;
      const auto whole = truncation_pair(L, *L.bottom(), *L.top());
      const auto star = ustar_family(L, f.family, canonical_pairs(L, L.elements()));
      const auto v1 = interval_agreement(L, f.family, star, whole);
      full.record(v1.accepted(), [&] { return label + ": " + (v1.witness ? v1.witness->description : v1.detail); });
      const auto single = ustar_family(L, f.family, {whole});
      const auto v2 = interval_agreement(L, f.family, single, whole);
      collapse.record(v2.accepted(), [&] { return label + ": " + (v2.witness ? v2.witness->description : v2.detail); });
    }
  }
  out.push_back(full.as_check("u* = u on every finite catalog family", true));
  out.push_back(collapse.as_check("u_{(bottom, top)} = u on bounded carriers", true));
  return out;
}

// ---------------------------------------------------------------------------

Checks suite_closure_t4(const SuiteConfig& cfg) {
  Checks out;
  Tally t;
  for (const auto& e : finite_catalog()) {
    const auto& L = e.lattice;
    if (L.size() > 8) continue;
    const auto subs = enumerate_sublattices(L);
    for (const auto& f : e.families) {
      const auto star = ustar_family(L, f.family, canonical_pairs(L, L.elements()));
      for (const auto& S : subs) {
        const auto cu = kernel_closure(L, f.family, S);
        const auto cs = kernel_closure(L, star, S);
        t.record(cu == cs, [&] { return L.name() + "/" + f.name + ": closures under u and u* differ"; });
      }
    }
  }
  out.push_back(t.as_check("closure of every sublattice agrees under u and u* (<= 8 elements)", true));

  // Rational line: the sublattice {0} u {1/k} contains the limit of 1/k under both uniformities.
  const RationalLine Q;
  const auto recip = parse_rational_sequence("1/k");
  const SemimetricFamily<Rational> absfam("qline", {abs_semimetric()});
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= 8; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  const auto ustar = ustar_family(Q, absfam, J);
  const MetricCertificate<Rational> cert{[](const Rational& eps, const LatticeSemimetric<Rational>&) {
    return static_cast<std::size_t>(ceil_of(Rational(1 / eps)).get_ui());
  }};
  const std::size_t h = std::min<std::size_t>(cfg.horizon, 5'000);
  const auto grid = cfg.effective_eps_grid();
  out.push_back(check_from_verdict("1/k -> 0 under |.|", metric_converges(recip, Rational(0), absfam, cert, grid, h), 1));
  out.push_back(check_from_verdict("1/k -> 0 under u*", metric_converges(recip, Rational(0), ustar, cert, grid, h),
                                   J.size()));
  return out;
}

// ---------------------------------------------------------------------------

struct Entry {
  SuiteInfo info;
  std::function<Checks(const SuiteConfig&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> v = {
        {{"closure-t4-finite", "a sublattice is closed for u iff it is closed for u*"}, suite_closure_t4},
        {{"ex", "sigma is strictly coarser than the unbounded topology of the sequence space"}, suite_ex},
        {{"ex-r", "U_n base of u* on the line; u complete, u* not complete"}, suite_ex_r},
        {{"exhaustive-t2", "u* is exhaustive on monotone witnesses; exhaustive u equals u*"}, suite_exhaustive_t2},
        {{"lemma-l2", "lattice polynomials and truncation perturbations are Lipschitz in d"}, suite_lemma_l2},
        {{"lemma-l5", "|x-y| ^ a = |f_{y-a,y}x - f_{y-a,y}y| + |f_{y,y+a}x - f_{y,y+a}y|"}, suite_lemma_l5},
        {{"o1o2", "finite/cofinite algebra: O2-convergent but not O1-convergent"}, suite_o1o2},
        {{"prop-d", "L distributive iff every f_{a,b} is a lattice homomorphism"}, suite_prop_d},
        {{"prop-p1", "f_{a,b} o f_{c,d} = f_{a v (b ^ c), b ^ d}"}, suite_prop_p1},
        {{"prop-ph", "u_J(S) Hausdorff iff u Hausdorff and x = sup (s ^ x) = inf (s v x)"}, suite_prop_ph},
        {{"prop-q", "kernel classes are congruences and the quotient is Hausdorff"}, suite_prop_q},
        {{"subnet-t3", "O2 convergence of truncated images yields an FO1-convergent subnet"}, suite_subnet_t3},
    };
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.info.name < b.info.name; });
    return v;
  }();
  return all;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool is_known_suite(std::string_view name) {
  const auto& r = suite_registry();
  return std::any_of(r.begin(), r.end(), [&](const SuiteInfo& s) { return s.name == name; });
}

SuiteRecord run_suite(std::string_view name, const SuiteConfig& config) {
  for (const auto& e : entries()) {
    if (e.info.name != name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteRecord rec{e.info.name, e.info.anchor, {}, std::nullopt};
    try {
      rec.checks = e.run(config);
    } catch (const std::exception& ex) {
      rec.checks.push_back(check_from_verdict("suite aborted", Verdict::falsified(ex.what(), std::nullopt, false), 0));
    }
    if (config.timing)
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
  }
  throw UnknownSuiteError(std::string(name));
}

Report run_suites(const SuiteConfig& config) {
  std::vector<std::string> names = config.suites;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) {
    names.clear();
    for (const auto& s : suite_registry()) names.push_back(s.name);
  }
  for (const auto& n : names)
    if (!is_known_suite(n)) throw UnknownSuiteError(n);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  Report report;
  for (const auto& n : names) report.suites.push_back(run_suite(n, config));
  return report;
}

}  // namespace ulat::lab
