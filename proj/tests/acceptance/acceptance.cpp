// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Library results are recomputed with independent oracles where a
// direct recomputation is possible.

#include "oracles.hpp"

#include "ulat/catalog.hpp"
#include "ulat/convergence.hpp"
#include "ulat/expr.hpp"
#include "ulat/fincof.hpp"
#include "ulat/kernel.hpp"
#include "ulat/lgroup.hpp"
#include "ulat/metric.hpp"
#include "ulat/rational_line.hpp"
#include "ulat/real_entourage.hpp"
#include "ulat/semimetric.hpp"
#include "ulat/separation.hpp"
#include "ulat/subnet.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace ulat;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

Outcome split_difference() {
  const RationalVectors Q(5);
  oracle::RationalSource src(2024);
  for (int t = 0; t < 10'000; ++t) {
    const RatVec x = src.vec(5), y = src.vec(5), a = src.nonnegative_vec(5);
    const auto s = l5_decompose(Q, x, y, a);
    if (!l5_identity_holds(Q, s)) return bad("library identity fails at case " + std::to_string(t));
    for (std::size_t i = 0; i < 5; ++i) {
      const Rational d = oracle::absq(x[i] - y[i]);
      const Rational lhs = d < a[i] ? d : a[i];
      const Rational low = oracle::absq(oracle::clamp(y[i] - a[i], y[i], x[i]) - oracle::clamp(y[i] - a[i], y[i], y[i]));
      const Rational high = oracle::absq(oracle::clamp(y[i], y[i] + a[i], x[i]) - oracle::clamp(y[i], y[i] + a[i], y[i]));
      if (lhs != low + high || s.lhs[i] != lhs || s.term_low[i] != low || s.term_high[i] != high)
        return bad("coordinate " + std::to_string(i) + " of case " + std::to_string(t) + ": x=" + str(x) + " y=" + str(y) +
                   " a=" + str(a));
    }
  }
  for (int t = 0; t < 10'000; ++t) {
    const RatVec s = src.vec(5), x = src.vec(5), y = src.vec(5), a = src.nonnegative_vec(5);
    if (!l5_left_bound(Q, s, x, y, a)) return bad("library left bound fails at case " + std::to_string(t));
    for (std::size_t i = 0; i < 5; ++i) {
      const Rational d = oracle::absq(x[i] - y[i]);
      const Rational left = oracle::absq(oracle::clamp(s[i], s[i] + a[i], x[i]) - oracle::clamp(s[i], s[i] + a[i], y[i]));
      if (left > (d < a[i] ? d : a[i])) return bad("scalar left bound fails at case " + std::to_string(t));
    }
  }
  return ok("10000 identity cases and 10000 left-bound cases in Q^5, exact");
}

Outcome composition_law() {
  const auto P = powerset_lattice(3);
  std::size_t n = 0;
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      for (std::uint32_t c = 0; c < 8; ++c)
        for (std::uint32_t d = 0; d < 8; ++d)
          for (std::uint32_t x = 0; x < 8; ++x, ++n) {
            const auto ea = P.element(a), eb = P.element(b), ec = P.element(c), ed = P.element(d), ex = P.element(x);
            const auto lhs = truncate_f(P, truncation_pair(P, ea, eb), truncate_f(P, truncation_pair(P, ec, ed), ex));
            const auto rhs = truncate_f(
                P, truncation_pair(P, P.join(ea, P.meet(eb, ec)), P.meet(eb, ed)), ex);
            const std::uint32_t oracle_value =
                oracle::trunc_set(a, b, oracle::trunc_set(c, d, x));
            const std::uint32_t oracle_rhs = oracle::trunc_set(a | (b & c), b & d, x);
            if (lhs != rhs || lhs != P.element(oracle_value) || oracle_value != oracle_rhs)
              return bad("(a,b,c,d,x) = (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                         std::to_string(d) + "," + std::to_string(x) + ")");
          }
  return ok(std::to_string(n) + " tuples over powerset({1,2,3})");
}

// Brute-force homomorphism scan written against the lattice operations only.
std::optional<std::string> homomorphism_violation(const FiniteLattice& L) {
  for (auto a : L.elements())
    for (auto b : L.elements())
      for (auto x : L.elements())
        for (auto y : L.elements()) {
          auto f = [&](FiniteElement z) { return L.join(L.meet(z, b), a); };
          if (f(L.join(x, y)) != L.join(f(x), f(y)) || f(L.meet(x, y)) != L.meet(f(x), f(y)))
            return L.element_name(a) + "," + L.element_name(b) + " at " + L.element_name(x) + "," + L.element_name(y);
        }
  return std::nullopt;
}

Outcome dichotomy() {
  std::vector<FiniteLattice> dist = {powerset_lattice(3), divisor_lattice(60)};
  for (unsigned n = 1; n <= 6; ++n) dist.push_back(chain_lattice(n));
  for (const auto& L : dist) {
    if (find_non_homomorphic_truncation(L)) return bad("library reports a violation on " + L.name());
    if (auto v = homomorphism_violation(L)) return bad("brute force finds a violation on " + L.name() + ": " + *v);
  }
  std::string found;
  for (const auto& L : {pentagon_lattice(), diamond_lattice()}) {
    const auto cex = find_non_homomorphic_truncation(L);
    if (!cex) return bad("no violation found on " + L.name());
    const auto& p = cex->pair;
    auto f = [&](FiniteElement z) { return truncate_f(L, p, z); };
    const bool join_ok = f(L.join(cex->x, cex->y)) == L.join(f(cex->x), f(cex->y));
    const bool meet_ok = f(L.meet(cex->x, cex->y)) == L.meet(f(cex->x), f(cex->y));
    if (join_ok && meet_ok) return bad("reported witness on " + L.name() + " does not reproduce");
    found += " " + L.name() + ":(" + L.element_name(p.a) + "," + L.element_name(p.b) + "," + L.element_name(cex->x) +
             "," + L.element_name(cex->y) + ")";
  }
  return ok(std::to_string(dist.size()) + " distributive carriers clean; violations" + found);
}

Outcome lipschitz_bounds() {
  const RationalVectors G(3);
  const auto d = l1_semimetric(G);
  std::mt19937_64 rng(77);
  unsigned deepest = 0;
  for (int i = 0; i < 1'000; ++i) {
    const auto t = OperatorTree::random(rng, 5);
    if (t.depth() > 5) return bad("tree deeper than 5");
    deepest = std::max(deepest, t.depth());
    std::vector<RatVec> xs, ys;
    for (std::size_t s = 0; s < t.arity; ++s) {
      xs.push_back(G.sample(rng));
      ys.push_back(G.sample(rng));
    }
    if (!operator_tree_bound_holds(G, d, t, xs, ys)) return bad("tree bound fails on tree " + std::to_string(i));
    // Recompute the right side directly.
    Rational rhs = 0;
    for (std::size_t s = 0; s < t.arity; ++s) rhs += oracle::l1_distance(xs[s], ys[s]);
    if (oracle::l1_distance(t.evaluate(G, xs), t.evaluate(G, ys)) > rhs)
      return bad("direct recomputation fails on tree " + std::to_string(i));
  }
  for (int i = 0; i < 1'000; ++i) {
    const auto ab = truncation_pair(G, G.sample(rng), G.sample(rng));
    const auto cd = truncation_pair(G, G.sample(rng), G.sample(rng));
    const auto x = G.sample(rng), y = G.sample(rng);
    if (!truncation_perturbation_bound_holds(G, d, ab, cd, x, y))
      return bad("perturbation bound fails at case " + std::to_string(i));
  }
  return ok("1000 operator trees (max depth " + std::to_string(deepest) + ") and 1000 perturbations, exact");
}

bool in_base(std::uint64_t n, const Rational& x, const Rational& y) {
  const Rational N(static_cast<unsigned long>(n));
  return oracle::absq(x - y) <= Rational(1) / N || (x >= N && y >= N) || (x <= -N && y <= -N);
}

Outcome line_completeness() {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    const Verdict v = real_entourage_compose_check(n, 500 + n, 10'000);
    if (!v.is_exact()) return bad("composition at n=" + std::to_string(n) + ": " + str(v));
  }
  oracle::RationalSource src(91);
  for (int t = 0; t < 10'000; ++t) {
    const std::uint64_t n = 1 + static_cast<std::uint64_t>(t % 64);
    const Rational x = src.any(200, 9), y = src.any(200, 9), z = src.any(200, 9);
    if (in_base(2 * n, x, y) && in_base(2 * n, y, z) && !in_base(n, x, z))
      return bad("oracle triple escapes U_" + std::to_string(n));
  }

  const RationalLine Q;
  const SemimetricFamily<Rational> absfam("qline", {abs_semimetric()});
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= 8; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  const auto ustar = ustar_family(Q, absfam, J);
  const auto ramp = parse_rational_sequence("k");
  const auto grid = default_eps_grid(10);
  const Verdict cu = metric_cauchy<Rational>(ramp, ustar, std::nullopt, grid, 2000);
  if (!cu.is_exact()) return bad("ramp under u*: " + str(cu));
  const Verdict ca = metric_cauchy<Rational>(ramp, absfam, std::nullopt, grid, 2000);
  if (!ca.is_falsified()) return bad("ramp under |.|: " + str(ca));
  // Symbolically x_{k+1} - x_k = 1, so no tail is 1/2-small under |.|.
  const auto form = Term::parse("k").to_parity();
  const RationalFunction step_even = form.odd.compose_affine(1, 1) - form.even;
  const RationalFunction step_odd = form.even.compose_affine(1, 1) - form.odd;
  for (const auto& step : {step_even, step_odd})
    if (!step.is_constant() || step(Rational(0)) != 1) return bad("x_{k+1} - x_k is not identically 1");

  std::vector<Rational> limits = {Rational(0), Rational(100), rat(-7, 2)};
  for (int i = 0; i < 100; ++i) limits.push_back(src.any(1000, 50));
  for (const auto& r : limits) {
    const Verdict v = ustar_nonconvergence_on_line(r);
    if (!v.is_exact()) return bad("r=" + str(r) + ": " + str(v));
    const auto pos = v.detail.find("n=");
    if (pos == std::string::npos) return bad("r=" + str(r) + ": no entourage index reported");
    const std::uint64_t n = std::stoull(v.detail.substr(pos + 2));
    for (std::uint64_t kk = n + 1; kk <= n + 200; ++kk)
      if (in_base(n, Rational(static_cast<unsigned long>(kk)), r)) return bad("r=" + str(r) + ": x_k enters U_n");
  }
  return ok("64 entourage levels x 10000 triples; ramp u*-Cauchy exact, |.|-Cauchy refuted; 103 limits refuted");
}

Outcome sequence_space_separation() {
  std::size_t n_cases = 0;
  for (std::uint64_t k = 1; k <= 50; ++k)
    for (std::uint64_t n = 1; n <= 200; ++n, ++n_cases) {
      const auto r = unbounded_separation(k, n);
      const Rational K(static_cast<unsigned long>(k)), N(static_cast<unsigned long>(n));
      if (r.truncated_difference != (K - 1) / N) return bad("closed form mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n));
      if (!(r.truncated_difference <= K / N) || r.bound != K / N) return bad("bound at k=" + std::to_string(k));
      if (!r.unclamped.is_infinite()) return bad("finite unclamped norm at k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  const auto rep = unbounded_separation_example(50, 200);
  if (!rep.truncated.is_exact() || !rep.unclamped.is_falsified()) return bad("library report disagrees");
  return ok(std::to_string(n_cases) + " (k, n) pairs: difference = (k-1)/n <= k/n, unclamped norm +inf");
}

Outcome o2_not_o1() {
  const FinCofAlgebra A;
  const auto seq = fincof_sequence("{x_k}", {FinCofShape::Kind::singleton, 0});
  const O2Witness<FinCofSet> canonical{constant_sequence<FinCofSet>("{}", FinCofSet::empty()),
                                       fincof_sequence("X \\ {x_1..x_j}", {FinCofShape::Kind::co_initial_segment, 0}),
                                       AffineIndex{1, 1}, UpperFamily::all_cofinite_sets};
  const Verdict o2 = verify_O2(A, seq, FinCofSet::empty(), canonical);
  if (!o2.is_exact()) return bad("O2: " + str(o2));
  const Verdict o1 = decide_O1_eventual_constancy(A, seq, FinCofSet::empty());
  if (!o1.is_falsified() || !o1.decided) return bad("O1: " + str(o1));
  // Oracle: distinct singletons never repeat, so no tail is constant.
  for (Atom k = 1; k <= 500; ++k)
    if (seq(k) == seq(k + 1) || !seq(k).contains(k)) return bad("A_k is not {x_k} at k=" + std::to_string(k));
  return ok("verify_O2 exact, eventual constancy refuted (decided)");
}

template <class C>
std::optional<std::string> recheck_enumeration(const C& c, const SubnetEnumeration<element_t<C>>& e) {
  for (std::size_t i = 0; i < e.steps.size(); ++i) {
    const auto& s = e.steps[i];
    if (s.phi < i + 1 || (i > 0 && s.phi <= e.steps[i - 1].phi)) return "phi at step " + std::to_string(i + 1);
    for (std::size_t f = 0; f < s.bounds.size(); ++f) {
      const auto& b = s.bounds[f];
      if (!leq(c, b.lower, b.value) || !leq(c, b.value, b.upper)) return "sandwich at step " + std::to_string(i + 1);
      if (i > 0 && (!leq(c, e.steps[i - 1].bounds[f].lower, b.lower) || !leq(c, b.upper, e.steps[i - 1].bounds[f].upper)))
        return "monotone bounds at step " + std::to_string(i + 1);
    }
  }
  return std::nullopt;
}

Outcome subnets() {
  const RationalLine Q;
  const auto seq = parse_rational_sequence("(-1)^k/k");
  const std::vector<TruncationPair<Rational>> F = {truncation_pair(Q, Rational(-1), Rational(1))};
  const std::vector<O2Witness<Rational>> W = {
      {parse_rational_sequence("-1/k"), parse_rational_sequence("1/k"), AffineIndex{1, 1}, UpperFamily::chain}};
  const auto FA = FinCofAlgebra();
  const auto sets = fincof_sequence("{x_k}", {FinCofShape::Kind::singleton, 0});
  const std::vector<TruncationPair<FinCofSet>> G = {truncation_pair(FA, FinCofSet::empty(), FinCofSet::co({2, 5}))};
  const std::vector<O2Witness<FinCofSet>> V = {
      {constant_sequence<FinCofSet>("{}", FinCofSet::empty()),
       fincof_sequence("X \\ {x_1..x_j}", {FinCofShape::Kind::co_initial_segment, 0}), AffineIndex{1, 1},
       UpperFamily::chain}};
  try {
    const auto e1 = build_subnet(Q, seq, F, W, 100);
    const auto e2 = build_subnet(FA, sets, G, V, 100);
    if (e1.steps.size() != 100 || e2.steps.size() != 100) return bad("short enumeration");
    if (!check_subnet_invariants(Q, e1).is_exact() || !check_subnet_invariants(FA, e2).is_exact())
      return bad("library invariant check failed");
    if (auto m = recheck_enumeration(Q, e1)) return bad("rational line: " + *m);
    if (auto m = recheck_enumeration(FA, e2)) return bad("fincof: " + *m);
    for (const auto& s : e1.steps)
      if (s.bounds[0].value != oracle::clamp(Rational(-1), Rational(1), seq(s.phi))) return bad("clamp oracle mismatch");
  } catch (const SubnetError& ex) {
    return bad(ex.what());
  }
  return ok("rational line and finite/cofinite inputs, 100 steps each, invariants exact");
}

Outcome kernels_and_ph() {
  std::size_t families = 0, instances = 0;
  for (const auto& e : finite_catalog()) {
    const auto& L = e.lattice;
    const auto subs = L.size() <= 8 ? enumerate_sublattices(L) : std::vector<std::vector<FiniteElement>>{};
    for (const auto& f : e.families) {
      ++families;
      try {
        const auto k = kernel_partition(L, f.family);
        const auto q = quotient(L, k, f.family);
        if (!zero_distance_classes(q.carrier, q.family).discrete()) return bad(L.name() + "/" + f.name + ": quotient not Hausdorff");
      } catch (const std::exception& ex) {
        return bad(L.name() + "/" + f.name + ": " + ex.what());
      }
      bool hausdorff = true;
      for (auto x : L.elements())
        for (auto y : L.elements())
          if (x != y && f.family.all_zero(x, y)) hausdorff = false;
      for (const auto& S : subs) {
        ++instances;
        // Criterion computed here from scratch.
        bool sandwich = true;
        for (auto x : L.elements()) {
          auto sup = L.meet(S.front(), x), inf = L.join(S.front(), x);
          for (auto s : S) {
            sup = L.join(sup, L.meet(s, x));
            inf = L.meet(inf, L.join(s, x));
          }
          sandwich = sandwich && sup == x && inf == x;
        }
        // Kernel of u_J(S): x ~ y iff every member of D vanishes on every truncated pair.
        bool kernel_trivial = true;
        for (auto x : L.elements())
          for (auto y : L.elements()) {
            if (x == y) continue;
            bool zero = true;
            for (auto a : S)
              for (auto b : S)
                if (leq(L, a, b)) {
                  const auto p = truncation_pair(L, a, b);
                  zero = zero && f.family.all_zero(truncate_f(L, p, x), truncate_f(L, p, y));
                }
            if (zero) kernel_trivial = false;
          }
        const bool criterion = hausdorff && sandwich;
        const auto r = ph_criterion(L, S, f.family);
        if (criterion != kernel_trivial || r.criterion != criterion || r.kernel_hausdorff != kernel_trivial)
          return bad(L.name() + "/" + f.name + ": criterion and kernel disagree on a sublattice of size " +
                     std::to_string(S.size()));
      }
    }
  }
  return ok(std::to_string(families) + " catalog families; " + std::to_string(instances) + " (family, sublattice) pairs agree");
}

Outcome bounded_collapse() {
  std::size_t n = 0;
  for (const auto& e : finite_catalog()) {
    const auto& L = e.lattice;
    if (!L.bottom() || !L.top()) continue;
    const auto whole = truncation_pair(L, *L.bottom(), *L.top());
    for (const auto& f : e.families) {
      const auto U = ustar_family(L, f.family, {whole});
      const Verdict v = interval_agreement(L, f.family, U, whole);
      if (!v.is_exact()) return bad(L.name() + "/" + f.name + ": " + str(v));
      for (std::size_t i = 0; i < U.size(); ++i)
        for (auto x : L.elements())
          for (auto y : L.elements())
            if (U[i](x, y) != f.family[i](x, y)) return bad(L.name() + "/" + f.name + ": pointwise mismatch");
      ++n;
    }
  }
  return ok(std::to_string(n) + " bounded carrier families: u* with (bottom, top) equals u, exact");
}

Outcome exhaustivity_contrast() {
  const RationalLine Q;
  const SemimetricFamily<Rational> absfam("qline", {abs_semimetric()});
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= 8; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  const auto ustar = ustar_family(Q, absfam, J);
  const auto ramp = parse_rational_sequence("k");
  const auto grid = default_eps_grid(10);
  const Verdict a = exhaustivity_probe(Q, ramp, absfam, std::nullopt, grid, 2000);
  const Verdict u = exhaustivity_probe(Q, ramp, ustar, std::nullopt, grid, 2000);
  if (!a.is_falsified()) return bad("|.|: " + str(a));
  if (!u.is_exact()) return bad("u*: " + str(u));
  // Oracle for the u* side: past k = n every clamp to [-n, n] is constant.
  for (long n = 1; n <= 8; ++n)
    for (long k = n; k <= n + 100; ++k)
      if (oracle::clamp(Rational(-n), Rational(n), Rational(k)) != Rational(n)) return bad("clamp oracle");
  return ok("x_k = k: not Cauchy under |.| (" + a.witness->description + "), Cauchy under u* (exact)");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;  // 0 = no runtime bound
  };
  const std::vector<Criterion> criteria = {
      {"split-difference identity and left bound in Q^5", split_difference, 5.0},
      {"truncation composition law on powerset(3)", composition_law, 5.0},
      {"distributive iff every truncation is a homomorphism", dichotomy, 0},
      {"Lipschitz bounds for operator trees and perturbations", lipschitz_bounds, 0},
      {"U_n base on the line: u complete, u* not complete", line_completeness, 0},
      {"truncated norm versus unclamped norm in the sequence space", sequence_space_separation, 10.0},
      {"finite/cofinite singletons: O2 but not O1", o2_not_o1, 0},
      {"constructive subnets on the line and finite/cofinite algebra", subnets, 0},
      {"kernels, quotients and the Hausdorff criterion on the catalog", kernels_and_ph, 0},
      {"bounded carriers: u* = u", bounded_collapse, 0},
      {"exhaustivity contrast for x_k = k", exhaustivity_contrast, 0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& ex) {
      o = bad(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (o.pass && criteria[i].budget_s > 0 && secs >= criteria[i].budget_s) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(criteria[i].budget_s) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %2zu: %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
