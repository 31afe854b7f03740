#include "oracles.hpp"

#include "ulat/catalog.hpp"
#include "ulat/semimetric.hpp"

#include <gtest/gtest.h>

namespace {

using namespace ulat;

TEST(Validate, L1OnQ3IsVerifiedBySampling) {
  const RationalVectors Q3(3);
  const Verdict v = validate_semimetric(Q3, l1_semimetric(Q3), {7, 3000});
  EXPECT_EQ(v.status, Status::verified);
  EXPECT_EQ(v.horizon, 3000u);
}

TEST(Validate, ZeroSemimetricPasses) {
  EXPECT_TRUE(validate_semimetric(RationalVectors(2), zero_semimetric<RatVec>()).accepted());
  EXPECT_TRUE(validate_semimetric(pentagon_lattice(), zero_semimetric<FiniteElement>()).is_exact());
}

TEST(Validate, OneSidedDifferenceFailsSymmetry) {
  const RationalVectors Q2(2);
  const auto broken = make_semimetric<RatVec>("positive-part", [](const RatVec& x, const RatVec& y) {
    const Rational diff = x[0] - y[0];
    return ExtValue(diff > 0 ? diff : Rational(0));
  });
  const Verdict v = validate_semimetric(Q2, broken, {1, 500});
  ASSERT_TRUE(v.is_falsified());
  EXPECT_NE(v.witness->description.find("symmetry"), std::string::npos);
  EXPECT_FALSE(v.decided);
}

TEST(Validate, EnumeratedFailureIsDecided) {
  // Triangle inequality fails on a 3-chain: d(0, 2) = 5 > d(0, 1) + d(1, 2).
  const auto C = chain_lattice(3);
  const auto table = make_semimetric<FiniteElement>("spiky", [](FiniteElement x, FiniteElement y) {
    if (x == y) return ExtValue();
    return ExtValue(x.index + y.index == 2 ? 5L : 1L);
  });
  const Verdict t = validate_semimetric(C, table);
  ASSERT_TRUE(t.is_falsified());
  EXPECT_TRUE(t.decided);
}

TEST(Derived, ClampedOnRationalLine) {
  const RationalLine Q;
  const auto d = derived_semimetric(Q, abs_semimetric(), truncation_pair(Q, Rational(-1), Rational(1)));
  EXPECT_TRUE(d(Rational(5), Rational(7)).is_zero());
  EXPECT_EQ(d(Rational(0), rat(1, 2)), ExtValue(rat(1, 2)));
  EXPECT_EQ(d(Rational(-3), Rational(3)), ExtValue(Rational(2)));
  ASSERT_TRUE(d.truncation);
  EXPECT_EQ(d.base, "abs");
}

TEST(Derived, DiscreteOnTwoElementPowerset) {
  const auto P = powerset_lattice(2);
  const auto p = truncation_pair(P, P.element(oracle::mask_of({1})), P.element(oracle::mask_of({1, 2})));
  const auto d = derived_semimetric(P, discrete_semimetric<FiniteElement>(), p);
  EXPECT_EQ(d(P.element(0), P.element(oracle::mask_of({2}))), ExtValue(1L));
  EXPECT_TRUE(d(P.element(0), P.element(oracle::mask_of({1}))).is_zero());
}

TEST(Derived, RejectsNonCanonicalPairs) {
  const RationalLine Q;
  EXPECT_THROW(derived_semimetric(Q, abs_semimetric(), truncation_pair(Q, Rational(1), Rational(0))),
               std::invalid_argument);
}

TEST(Derived, OutputsStayLatticeSemimetrics) {
  const RationalVectors Q3(3);
  const auto d = l1_semimetric(Q3);
  oracle::RationalSource src(59);
  for (int t = 0; t < 20; ++t) {
    const auto a = src.vec(3);
    const auto b = Q3.add(a, src.nonnegative_vec(3));
    const auto dab = derived_semimetric(Q3, d, truncation_pair(Q3, a, b));
    EXPECT_TRUE(validate_semimetric(Q3, dab, {static_cast<std::uint64_t>(t + 1), 400}).accepted());
    for (int s = 0; s < 20; ++s) {
      const auto x = src.vec(3), y = src.vec(3);
      EXPECT_EQ(dab(x, y),
                ExtValue(oracle::l1_distance(oracle::clamp_vec(a, b, x), oracle::clamp_vec(a, b, y))));
    }
  }
}

TEST(Derived, BrokenBaseIsCaughtAtEvaluation) {
  const RationalLine Q;
  const auto inner_heavy = make_semimetric<Rational>("odd", [](const Rational& x, const Rational& y) {
    // Larger inside [-1, 1] than outside: a truncation can increase it.
    const bool inside = x >= -1 && x <= 1 && y >= -1 && y <= 1;
    return ExtValue(x == y ? Rational(0) : Rational(inside ? 5 : 1));
  });
  const auto d = derived_semimetric(Q, inner_heavy, truncation_pair(Q, Rational(-1), Rational(1)));
  EXPECT_THROW(d(Rational(3), Rational(-3)), std::logic_error);
}

TEST(Ustar, FamilyShapes) {
  const RationalLine Q;
  const SemimetricFamily<Rational> D("qline", {abs_semimetric()});
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= 8; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  const auto U = ustar_family(Q, D, J);
  EXPECT_EQ(U.size(), 8u);
  for (const auto& d : U) EXPECT_TRUE(d.truncation);
  EXPECT_THROW(ustar_family(Q, D, {}), std::invalid_argument);
}

TEST(Ustar, BoundedCarrierEqualsBaseFamilyPointwise) {
  for (const auto& e : finite_catalog()) {
    const auto& L = e.lattice;
    const std::vector<TruncationPair<FiniteElement>> J = {truncation_pair(L, *L.bottom(), *L.top())};
    for (const auto& f : e.families) {
      const auto U = ustar_family(L, f.family, J);
      for (std::size_t i = 0; i < U.size(); ++i)
        for (const auto x : L.elements())
          for (const auto y : L.elements()) ASSERT_EQ(U[i](x, y), f.family[i](x, y));
    }
  }
}

TEST(Ustar, L1OnQ2ClampedToUnitSquare) {
  const RationalVectors Q2(2);
  const SemimetricFamily<RatVec> D("qvec2", {l1_semimetric(Q2)});
  const auto U = ustar_family(Q2, D, {truncation_pair(Q2, RatVec{0, 0}, RatVec{1, 1})});
  ASSERT_EQ(U.size(), 1u);
  EXPECT_EQ(U[0](RatVec{2, 2}, RatVec{0, 0}), ExtValue(Rational(2)));
}

TEST(CanonicalPairs, CountsComparablePairs) {
  const auto C = chain_lattice(4);
  EXPECT_EQ(canonical_pairs(C, C.elements()).size(), 10u);  // 4 + 3 + 2 + 1
  const auto P = powerset_lattice(3);
  EXPECT_EQ(canonical_pairs(P, P.elements()).size(), 27u);  // 3^3 nested pairs
}

TEST(IntervalAgreement, DerivedAgreesOnItsInterval) {
  const auto D = divisor_lattice(60);
  const FiniteFamily base("divisor60", {valuation_semimetric(D)});
  for (const auto& p : canonical_pairs(D, D.elements())) {
    const auto derived = ustar_family(D, base, {p});
    EXPECT_TRUE(interval_agreement(D, base, derived, p).is_exact());
  }
}

TEST(IntervalAgreement, DiscreteVersusZeroDisagrees) {
  const auto C = chain_lattice(2);
  const FiniteFamily discrete("chain2", {discrete_semimetric<FiniteElement>()});
  const FiniteFamily zero("chain2", {zero_semimetric<FiniteElement>()});
  const auto whole = truncation_pair(C, *C.bottom(), *C.top());
  const Verdict v = interval_agreement(C, discrete, zero, whole);
  ASSERT_TRUE(v.is_falsified());
  EXPECT_TRUE(v.decided);
  EXPECT_NE(v.witness->description.find("second family"), std::string::npos);
  EXPECT_TRUE(interval_agreement(C, discrete, discrete, whole).is_exact());
}

TEST(LemmaL2, OperatorTreeBoundOnExamples) {
  const RationalVectors Q3(3);
  const auto d = l1_semimetric(Q3);
  std::mt19937_64 rng(61);
  oracle::RationalSource src(67);
  for (int t = 0; t < 50; ++t) {
    const auto tree = OperatorTree::random(rng, 4);
    EXPECT_LE(tree.depth(), 4u);
    std::vector<RatVec> xs, ys;
    for (std::size_t i = 0; i < tree.arity; ++i) {
      xs.push_back(src.vec(3));
      ys.push_back(src.vec(3));
    }
    EXPECT_TRUE(operator_tree_bound_holds(Q3, d, tree, xs, ys));
    EXPECT_TRUE(operator_tree_bound_holds(Q3, d, tree, xs, xs));
  }
  const auto tree = OperatorTree::random(rng, 2);
  EXPECT_THROW(operator_tree_bound_holds(Q3, d, tree, {}, {}), std::invalid_argument);
}

TEST(LemmaL2, PerturbationBoundOnScalarExample) {
  const RationalLine Q;
  const auto d = abs_semimetric();
  const auto ab = truncation_pair(Q, Rational(0), Rational(2));
  const auto cd = truncation_pair(Q, Rational(1), Rational(3));
  // Left: |f_{0,2}(5) - f_{0,2}(-5)| = 2. Right: |3 - 1| + 2 + 2 = 6.
  EXPECT_TRUE(truncation_perturbation_bound_holds(Q, d, ab, cd, Rational(5), Rational(-5)));
  // Collapsed (c, d) = (1, 1) at x = 2, y = 0: left 2, right 0 + 2 + 2 = 4.
  EXPECT_TRUE(truncation_perturbation_bound_holds(Q, d, ab, truncation_pair(Q, Rational(1), Rational(1)),
                                                  Rational(2), Rational(0)));
  // Swapping roles: f_{1,1} collapses everything, so the bound with (a, b) = (1, 1)
  // as the perturbed pair holds with left side 0.
  EXPECT_TRUE(truncation_perturbation_bound_holds(Q, d, truncation_pair(Q, Rational(1), Rational(1)), ab,
                                                  Rational(2), Rational(0)));
}

}  // namespace
