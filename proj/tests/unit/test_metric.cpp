#include "oracles.hpp"

#include "ulat/catalog.hpp"
#include "ulat/expr.hpp"
#include "ulat/fincof.hpp"
#include "ulat/metric.hpp"
#include "ulat/rational_line.hpp"
#include "ulat/separation.hpp"
#include "ulat/subnet.hpp"

#include <gtest/gtest.h>

namespace {

using namespace ulat;

SequenceFamily<Rational> q(const char* text) { return parse_rational_sequence(text); }

const SemimetricFamily<Rational>& abs_family() {
  static const SemimetricFamily<Rational> D("qline", {abs_semimetric()});
  return D;
}

SemimetricFamily<Rational> symmetric_ustar(long up_to) {
  const RationalLine Q;
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= up_to; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  return ustar_family(Q, abs_family(), J);
}

MetricCertificate<Rational> ceil_certificate(long numerator) {
  return {[numerator](const Rational& eps, const LatticeSemimetric<Rational>&) {
    return static_cast<std::size_t>(ceil_of(Rational(Rational(numerator) / eps)).get_ui());
  }};
}

// ---------------------------------------------------------------------------
// Convergence and Cauchy checks

TEST(MetricConverges, ReciprocalTendsToZero) {
  const auto grid = default_eps_grid(8);
  ASSERT_EQ(grid.size(), 9u);
  EXPECT_EQ(grid.back(), rat(1, 256));
  const Verdict v = metric_converges(q("1/k"), Rational(0), abs_family(), ceil_certificate(1), grid, 2000);
  EXPECT_EQ(v.status, Status::verified) << v;
  EXPECT_EQ(v.horizon, 2000u);
  EXPECT_TRUE(metric_converges(q("1/k"), Rational(0), symmetric_ustar(6), ceil_certificate(1), grid, 2000).accepted());
}

TEST(MetricConverges, RampIsRefutedAtAReproducibleIndex) {
  const std::vector<Rational> grid = {Rational(1), rat(1, 2)};
  const auto ramp = q("k");
  const Verdict v = metric_converges(ramp, Rational(0), abs_family(), ceil_certificate(1), grid, 100);
  ASSERT_TRUE(v.is_falsified());
  ASSERT_TRUE(v.witness && v.witness->index);
  const std::size_t k = *v.witness->index;
  EXPECT_GT(oracle::absq(ramp(k)), Rational(1)) << "x_" << k << " = " << ramp(k);
}

TEST(MetricConverges, RejectsBadGrids) {
  EXPECT_THROW(metric_converges(q("1/k"), Rational(0), abs_family(), ceil_certificate(1), {}, 10),
               std::invalid_argument);
  EXPECT_THROW(metric_converges(q("1/k"), Rational(0), abs_family(), ceil_certificate(1), {Rational(0)}, 10),
               std::invalid_argument);
}

TEST(MetricCauchy, RampUnderUstarIsExact) {
  const Verdict v = metric_cauchy<Rational>(q("k"), symmetric_ustar(8), std::nullopt, default_eps_grid(4), 500);
  EXPECT_TRUE(v.is_exact()) << v;
  EXPECT_TRUE(metric_cauchy<Rational>(q("-3*k"), symmetric_ustar(8), std::nullopt, default_eps_grid(4), 500).is_exact());
}

TEST(MetricCauchy, RampUnderAbsoluteValueFails) {
  const Verdict v = metric_cauchy<Rational>(q("k"), abs_family(), std::nullopt, {Rational(1)}, 500);
  ASSERT_TRUE(v.is_falsified());
  ASSERT_TRUE(v.witness->index);
  // With no certificate the anchor is x_1, so the violation is |1 - k| > 1.
  EXPECT_GT(oracle::absq(Rational(1) - q("k")(*v.witness->index)), Rational(1));
}

TEST(MetricCauchy, BoundedMonotoneWithCertificate) {
  const Verdict v = metric_cauchy<Rational>(q("1 - 1/k"), abs_family(), ceil_certificate(2), default_eps_grid(6), 3000);
  EXPECT_EQ(v.status, Status::verified) << v;
  // The certificate is tight enough: brute-force pairwise check on a prefix.
  const auto s = q("1 - 1/k");
  for (const auto& eps : default_eps_grid(3)) {
    const std::size_t N = ceil_of(Rational(2 / eps)).get_ui();
    for (std::size_t j = N; j < N + 30; ++j)
      for (std::size_t k = j; k < N + 30; ++k) ASSERT_LE(oracle::absq(s(j) - s(k)), eps);
  }
}

TEST(MetricCauchy, CertificatePastHorizonIsInconclusive) {
  const Verdict v = metric_cauchy<Rational>(q("1 - 1/k"), abs_family(), ceil_certificate(2), {rat(1, 100)}, 50);
  EXPECT_EQ(v.status, Status::inconclusive) << v;
}

TEST(Exhaustivity, NonMonotoneInputThrows) {
  const RationalLine Q;
  EXPECT_THROW(exhaustivity_probe(Q, q("(-1)^k/k"), abs_family(), std::nullopt, {Rational(1)}, 100),
               std::invalid_argument);
}

TEST(Exhaustivity, DecreasingInputIsAccepted) {
  const RationalLine Q;
  const Verdict v = exhaustivity_probe(Q, q("1/k"), abs_family(), ceil_certificate(2), default_eps_grid(4), 1000);
  EXPECT_TRUE(v.accepted()) << v;
  EXPECT_TRUE(exhaustivity_probe(Q, q("-k"), abs_family(), std::nullopt, {Rational(1)}, 100).is_falsified());
}

// ---------------------------------------------------------------------------
// Subnet extraction

TEST(Subnet, AlternatingHarmonicOnRationalLine) {
  const RationalLine Q;
  const std::vector<TruncationPair<Rational>> F = {truncation_pair(Q, Rational(-1), Rational(1)),
                                                   truncation_pair(Q, rat(1, 10), Rational(2))};
  const std::vector<O2Witness<Rational>> W = {
      {q("-1/k"), q("1/k"), AffineIndex{1, 0}, UpperFamily::chain},
      {constant_sequence<Rational>("1/10", rat(1, 10)), constant_sequence<Rational>("1/10", rat(1, 10)),
       AffineIndex{1, 10}, UpperFamily::chain}};
  const auto e = build_subnet(Q, q("(-1)^k/k"), F, W, 80);
  ASSERT_EQ(e.steps.size(), 80u);
  EXPECT_TRUE(check_subnet_invariants(Q, e).is_exact());
  for (std::size_t i = 0; i < e.steps.size(); ++i) {
    EXPECT_EQ(e.steps[i].phi, i + 11);  // the second witness dominates
    EXPECT_EQ(e.steps[i].bounds[0].value, oracle::clamp(Rational(-1), Rational(1), q("(-1)^k/k")(i + 11)));
  }
}

TEST(Subnet, FinCofSingletons) {
  const FinCofAlgebra A;
  const auto sets = fincof_sequence("{x_k}", {FinCofShape::Kind::singleton, 0});
  const std::vector<TruncationPair<FinCofSet>> G = {truncation_pair(A, FinCofSet::empty(), FinCofSet::co({2, 5}))};
  const std::vector<O2Witness<FinCofSet>> V = {
      {constant_sequence<FinCofSet>("{}", FinCofSet::empty()),
       fincof_sequence("X \\ {x_1..x_j}", {FinCofShape::Kind::co_initial_segment, 0}), AffineIndex{1, 1},
       UpperFamily::chain}};
  const auto e = build_subnet(A, sets, G, V, 60);
  EXPECT_TRUE(check_subnet_invariants(A, e).is_exact());
  // f(x_k) = {x_k} minus {x_2, x_5}.
  for (const auto& s : e.steps) {
    const bool removed = s.phi == 2 || s.phi == 5;
    EXPECT_EQ(s.bounds[0].value, removed ? FinCofSet::empty() : FinCofSet::singleton(s.phi));
  }
}

TEST(Subnet, ConstantSequenceKeepsIdentityIndex) {
  const RationalLine Q;
  const auto c3 = constant_sequence<Rational>("3", Rational(3));
  const auto one = constant_sequence<Rational>("1", Rational(1));
  const std::vector<TruncationPair<Rational>> F = {truncation_pair(Q, Rational(0), Rational(5)),
                                                   truncation_pair(Q, Rational(-2), Rational(1))};
  const std::vector<O2Witness<Rational>> W = {{c3, c3, AffineIndex{1, 0}, UpperFamily::chain},
                                              {one, one, AffineIndex{1, 0}, UpperFamily::chain}};
  const auto e = build_subnet(Q, c3, F, W, 40);
  for (std::size_t i = 0; i < e.steps.size(); ++i) EXPECT_EQ(e.steps[i].phi, i + 1);
  EXPECT_TRUE(check_subnet_invariants(Q, e).is_exact());
}

TEST(Subnet, WrongWitnessRaisesWithIndices) {
  const RationalLine Q;
  const std::vector<TruncationPair<Rational>> F = {truncation_pair(Q, Rational(-1), Rational(1))};
  // m_j = 0 is not below the negative odd terms.
  const std::vector<O2Witness<Rational>> W = {
      {constant_sequence<Rational>("0", Rational(0)), q("1/k"), AffineIndex{2, 3}, UpperFamily::chain}};
  try {
    build_subnet(Q, q("(-1)^k/k"), F, W, 10);
    FAIL() << "expected SubnetError";
  } catch (const SubnetError& e) {
    EXPECT_EQ(e.truncation(), 0u);
    EXPECT_EQ(e.j(), 1u);
    EXPECT_EQ(e.k(), 5u);
    EXPECT_LT(q("(-1)^k/k")(e.k()), Rational(0));
  }
}

TEST(Subnet, ArgumentChecks) {
  const RationalLine Q;
  const std::vector<O2Witness<Rational>> W = {{q("-1/k"), q("1/k"), AffineIndex{1, 0}, UpperFamily::chain}};
  EXPECT_THROW(build_subnet(Q, q("1/k"), {}, W, 3), std::invalid_argument);
  EXPECT_THROW(build_subnet(Q, q("1/k"), {truncation_pair(Q, Rational(0), Rational(1)),
                                          truncation_pair(Q, Rational(0), Rational(2))},
                            W, 3),
               std::invalid_argument);
}

TEST(Subnet, InvariantCheckerCatchesTamperedSteps) {
  const RationalLine Q;
  const std::vector<TruncationPair<Rational>> F = {truncation_pair(Q, Rational(-1), Rational(1))};
  const std::vector<O2Witness<Rational>> W = {{q("-1/k"), q("1/k"), AffineIndex{1, 0}, UpperFamily::chain}};
  auto e = build_subnet(Q, q("(-1)^k/k"), F, W, 10);
  auto stalled = e;
  stalled.steps[4].phi = stalled.steps[3].phi;
  EXPECT_TRUE(check_subnet_invariants(Q, stalled).is_falsified());
  auto widened = e;
  widened.steps[6].bounds[0].upper = Rational(5);
  EXPECT_TRUE(check_subnet_invariants(Q, widened).is_falsified());
}

// ---------------------------------------------------------------------------
// Unbounded separation

TEST(Separation, TruncatedDifferenceMatchesClosedForm) {
  for (std::uint64_t k = 1; k <= 12; ++k)
    for (std::uint64_t n = 1; n <= 40; ++n) {
      const auto r = unbounded_separation(k, n);
      // Coordinates 1..k-1 move by 1/n; coordinate k and beyond are clamped to k.
      const Rational closed = Rational(static_cast<unsigned long>(k - 1)) / Rational(static_cast<unsigned long>(n));
      ASSERT_EQ(r.truncated_difference, closed) << "k=" << k << " n=" << n;
      ASSERT_EQ(r.bound, Rational(static_cast<unsigned long>(k)) / Rational(static_cast<unsigned long>(n)));
      ASSERT_TRUE(r.within_bound());
      ASSERT_TRUE(r.unclamped.is_infinite());
    }
}

TEST(Separation, ExampleReport) {
  const auto rep = unbounded_separation_example(10, 20);
  EXPECT_EQ(rep.cases, 200u);
  EXPECT_TRUE(rep.truncated.is_exact());
  EXPECT_TRUE(rep.unclamped.is_falsified());
  EXPECT_TRUE(rep.unclamped.decided);
}

}  // namespace
