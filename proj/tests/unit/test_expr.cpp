#include "oracles.hpp"

#include "ulat/expr.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace {

using namespace ulat;

Rational R(long n) { return Rational(n); }

struct Case {
  const char* text;
  std::function<Rational(long)> oracle;
};

TEST(Term, EvaluatesAgainstHandWrittenFormulas) {
  const std::vector<Case> cases = {
      {"1 - 1/k", [](long k) -> Rational { return R(1) - R(1) / R(k); }},
      {"(-1)^k/k", [](long k) -> Rational { return R(k % 2 == 0 ? 1 : -1) / R(k); }},
      {"3*k^2 + 1", [](long k) -> Rational { return R(3 * k * k + 1); }},
      {"alt * k", [](long k) -> Rational { return R(k % 2 == 0 ? k : -k); }},
      {"2k", [](long k) -> Rational { return R(2 * k); }},
      {"3(k+1)", [](long k) -> Rational { return R(3 * (k + 1)); }},
      {"-k + 4", [](long k) -> Rational { return R(4 - k); }},
      {"1/(2*k) - (k+1)/(k^2)", [](long k) -> Rational { return R(1) / R(2 * k) - R(k + 1) / R(k * k); }},
      {"(1 + alt)/2", [](long k) -> Rational { return R(k % 2 == 0 ? 1 : 0); }},
      {"7", [](long) -> Rational { return R(7); }},
  };
  for (const auto& c : cases) {
    const Term t = Term::parse(c.text);
    EXPECT_EQ(t.text(), c.text);
    for (long k = 1; k <= 25; ++k) ASSERT_EQ(t.evaluate(R(k)), c.oracle(k)) << c.text << " at k=" << k;
  }
}

TEST(Term, ParityFormAgreesWithTree) {
  for (const char* text : {"1 - 1/k", "(-1)^k/k", "3*k^2 + 1", "alt * k", "(k+1)/(k+2) + alt/(k*k)", "(-1)^k - 1/k"}) {
    const Term t = Term::parse(text);
    const ParityRational p = t.to_parity();
    for (std::size_t k = 1; k <= 60; ++k)
      ASSERT_EQ(p.at(k), t.evaluate(Rational(static_cast<unsigned long>(k)))) << text << " at k=" << k;
  }
}

TEST(Term, CustomVariableAndDomainErrors) {
  const Term t = Term::parse("j^2 - j", "j");
  EXPECT_EQ(t.evaluate(R(5)), R(20));
  EXPECT_THROW(Term::parse("k", "j"), TermSyntaxError);
  EXPECT_THROW(Term::parse("1/(k-3)").evaluate(R(3)), std::domain_error);
  EXPECT_THROW(Term::parse("(-1)^k").evaluate(rat(1, 2)), std::domain_error);
  EXPECT_EQ(Term::constant(rat(2, 3)).evaluate(R(100)), rat(2, 3));
}

TEST(Term, SyntaxErrors) {
  for (const char* bad : {"", "1 +", "(k", "k)", "2^k", "k^", "x", "1 // k", "k^99"})
    EXPECT_THROW(Term::parse(bad), TermSyntaxError) << "'" << bad << "'";
}

TEST(Affine, ParsesIntegerMaps) {
  auto a = parse_affine("k+1");
  EXPECT_EQ(a.scale, 1);
  EXPECT_EQ(a.offset, 1);
  a = parse_affine("2*k - 3");
  EXPECT_EQ(a.scale, 2);
  EXPECT_EQ(a.offset, -3);
  a = parse_affine("4");
  EXPECT_EQ(a.scale, 0);
  EXPECT_EQ(a.offset, 4);
  EXPECT_THROW(parse_affine("k^2"), TermSyntaxError);
  EXPECT_THROW(parse_affine("k/2"), TermSyntaxError);
  EXPECT_THROW(parse_affine("1/k"), TermSyntaxError);
}

TEST(Affine, EventualIndex) {
  const AffineIndex K = parse_eventual_index("2*j + 1");
  EXPECT_EQ(K.scale, 2u);
  EXPECT_EQ(K.offset, 1u);
  EXPECT_EQ(K(10), 21u);
  EXPECT_THROW(parse_eventual_index("j - 1"), TermSyntaxError);
  EXPECT_THROW(parse_eventual_index("-j"), TermSyntaxError);
}

TEST(Sequences, RationalCarriesConsistentDescriptor) {
  const auto s = parse_rational_sequence("(-1)^k/k");
  ASSERT_NE(s.symbolic(), nullptr);
  EXPECT_TRUE(descriptor_consistent(s, 200));
  EXPECT_EQ(s(3), rat(-1, 3));
}

TEST(Sequences, Vectors) {
  const auto s = parse_vector_sequence("[1/k, -1/k, 0]");
  const RatVec v = s(4);
  ASSERT_EQ(v.dim(), 3u);
  EXPECT_EQ(v[0], rat(1, 4));
  EXPECT_EQ(v[1], rat(-1, 4));
  EXPECT_EQ(v[2], R(0));
  EXPECT_THROW(parse_vector_sequence("1/k, 2"), TermSyntaxError);
}

TEST(Sequences, C00) {
  const auto u = parse_c00_sequence("unit(k)");
  for (std::uint64_t k = 1; k <= 10; ++k) {
    EXPECT_EQ(u(k).at(k), R(1));
    EXPECT_EQ(u(k).at(k + 1), R(0));
  }
  const auto w = parse_c00_sequence("1/2*unit(k+1) + unit(3)");
  EXPECT_EQ(w(1).at(2), rat(1, 2));
  EXPECT_EQ(w(1).at(3), R(1));
  EXPECT_EQ(w(2).at(3), rat(3, 2));  // both pieces land on coordinate 3
  EXPECT_EQ(parse_c00_sequence("0")(5), C00Vector());
  EXPECT_THROW(parse_c00_sequence("k"), TermSyntaxError);
  EXPECT_THROW(parse_c00_sequence("2 unit(k)"), TermSyntaxError);
  EXPECT_THROW(parse_c00_sequence("unit(k-5)")(2), std::domain_error);
}

TEST(Sequences, FinCofLiterals) {
  EXPECT_EQ(parse_fincof_sequence("{}")(3), FinCofSet::empty());
  EXPECT_EQ(parse_fincof_sequence("X")(3), FinCofSet::whole());
  EXPECT_EQ(parse_fincof_sequence("~{}")(1), FinCofSet::whole());
  EXPECT_EQ(parse_fincof_sequence("{1,3}")(9), FinCofSet::finite({1, 3}));
  EXPECT_EQ(parse_fincof_sequence("~{2}")(9), FinCofSet::co({2}));
}

TEST(Sequences, FinCofIndexedShapes) {
  const auto single = parse_fincof_sequence("{k+1}");
  const auto seg = parse_fincof_sequence("{1..k}");
  const auto coseg = parse_fincof_sequence("~{1..k+2}");
  for (std::uint64_t k = 1; k <= 12; ++k) {
    EXPECT_EQ(single(k), FinCofSet::singleton(k + 1));
    EXPECT_EQ(seg(k), FinCofSet::initial_segment(k));
    std::set<Atom> first;
    for (Atom a = 1; a <= k + 2; ++a) first.insert(a);
    EXPECT_EQ(coseg(k), FinCofSet::co(first));
  }
  EXPECT_NE(coseg.symbolic(), nullptr);
  for (const char* bad : {"{1..k", "Y", "{0}", "{1/2}", "~{k}", "{2k}", "{2..k}", "{1..2k}"})
    EXPECT_THROW(parse_fincof_sequence(bad), TermSyntaxError) << bad;
}

}  // namespace
