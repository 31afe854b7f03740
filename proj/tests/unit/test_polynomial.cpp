#include "oracles.hpp"

#include "ulat/polynomial.hpp"

#include <gtest/gtest.h>

namespace {

using namespace ulat;
using Outcome = SignDecision::Outcome;

bool brute_sign(const std::vector<Rational>& c, SignCondition cond, long from, long to) {
  for (long j = from; j <= to; ++j) {
    const Rational v = oracle::horner(c, Rational(j));
    if (cond == SignCondition::nonnegative && v < 0) return false;
    if (cond == SignCondition::positive && v <= 0) return false;
    if (cond == SignCondition::nonzero && v == 0) return false;
  }
  return true;
}

TEST(Polynomial, EvaluationAndArithmetic) {
  const Polynomial p({1, -3, 2});  // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(1)), 0);
  EXPECT_EQ(p(rat(1, 2)), 0);
  EXPECT_EQ(p(Rational(3)), 10);
  const Polynomial q = Polynomial({-1, 2}) * Polynomial({-1, 1});
  EXPECT_EQ(p, q);
  EXPECT_TRUE((p - q).is_zero());
  EXPECT_EQ((p - q).degree(), -1);
  EXPECT_EQ(p.compose_affine(2, 1)(Rational(1)), p(Rational(3)));
}

TEST(Polynomial, DecisionsMatchBruteForce) {
  oracle::RationalSource src(53);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int t = 0; t < 400; ++t) {
    std::vector<Rational> c;
    for (int i = deg(src.engine()); i >= 0; --i) c.push_back(src.any(6, 3));
    const Polynomial p(c);
    for (auto cond : {SignCondition::nonnegative, SignCondition::positive, SignCondition::nonzero}) {
      const auto d = decide_for_all_integers(p, cond, Integer(1));
      ASSERT_NE(d.outcome, Outcome::unknown);
      // Coefficients are bounded by 6 in absolute value, so every real root
      // lies below 1 + 6 / (1/3) = 19; scanning to 200 settles the sign.
      const bool brute = brute_sign(c, cond, 1, 200);
      ASSERT_EQ(d.outcome == Outcome::holds, brute) << p;
      if (d.outcome == Outcome::fails) {
        ASSERT_TRUE(d.counterexample);
        ASSERT_FALSE(brute_sign(c, cond, d.counterexample->get_si(), d.counterexample->get_si()));
      }
    }
  }
}

TEST(Polynomial, StartIndexIsRespected) {
  // x - 10 is nonnegative from 10 on but not from 9.
  const Polynomial p({-10, 1});
  EXPECT_EQ(decide_for_all_integers(p, SignCondition::nonnegative, Integer(10)).outcome, Outcome::holds);
  const auto d = decide_for_all_integers(p, SignCondition::nonnegative, Integer(9));
  EXPECT_EQ(d.outcome, Outcome::fails);
  EXPECT_EQ(*d.counterexample, 9);
}

TEST(Polynomial, ScanBudgetYieldsUnknown) {
  // Root at 10^7: the scan below the root bound exceeds a tiny budget.
  const Polynomial p({Rational(-10'000'000), 1});
  EXPECT_EQ(decide_for_all_integers(p, SignCondition::positive, Integer(1), 10).outcome, Outcome::unknown);
}

TEST(RationalFunction, LimitsAtInfinity) {
  const auto k = RationalFunction::variable();
  const auto one = RationalFunction::constant(1);
  EXPECT_EQ((one / k).limit_at_infinity().value, 0);
  EXPECT_EQ((one - one / k).limit_at_infinity().value, 1);
  EXPECT_EQ(k.limit_at_infinity().kind, Limit::Kind::plus_infinity);
  EXPECT_EQ((-k * k).limit_at_infinity().kind, Limit::Kind::minus_infinity);
  const auto r = (RationalFunction::constant(3) * k + one) / (RationalFunction::constant(2) * k);
  EXPECT_EQ(r.limit_at_infinity().kind, Limit::Kind::finite);
  EXPECT_EQ(r.limit_at_infinity().value, rat(3, 2));
}

TEST(RationalFunction, UndefinedPoints) {
  const auto r = RationalFunction::constant(1) / (RationalFunction::variable() - RationalFunction::constant(2));
  EXPECT_THROW(r(Rational(2)), std::domain_error);
  EXPECT_EQ(decide_leq_for_all(r, RationalFunction::constant(5), Integer(1)).outcome, Outcome::fails);
  EXPECT_EQ(decide_leq_for_all(r, RationalFunction::constant(5), Integer(3)).outcome, Outcome::holds);
  EXPECT_THROW(RationalFunction::constant(1) / RationalFunction(), std::domain_error);
}

TEST(RationalFunction, LeqAndMonotoneAgainstBruteForce) {
  const auto k = RationalFunction::variable();
  const auto one = RationalFunction::constant(1);
  struct Case {
    RationalFunction f;
    RationalFunction g;
  };
  const std::vector<Case> cases = {
      {one / k, one},
      {one - one / k, one},
      {k / (k + one), one - one / (k * k + one)},
      {RationalFunction::constant(5) / k, one},
      {k * k - RationalFunction::constant(7) * k, RationalFunction::constant(-12)},
  };
  for (const auto& c : cases) {
    bool brute = true;
    for (long j = 1; j <= 400; ++j) brute = brute && c.f(Rational(j)) <= c.g(Rational(j));
    EXPECT_EQ(decide_leq_for_all(c.f, c.g, Integer(1)).outcome == Outcome::holds, brute) << c.f << " <= " << c.g;
    for (bool inc : {true, false}) {
      bool mono = true;
      for (long j = 1; j <= 400; ++j) {
        const Rational a = c.f(Rational(j)), b = c.f(Rational(j + 1));
        mono = mono && (inc ? a <= b : a >= b);
      }
      EXPECT_EQ(decide_monotone(c.f, inc, Integer(1)).outcome == Outcome::holds, mono) << c.f;
    }
  }
}

}  // namespace
