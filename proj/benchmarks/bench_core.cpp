#include "ulat/catalog.hpp"
#include "ulat/convergence.hpp"
#include "ulat/expr.hpp"
#include "ulat/fincof.hpp"
#include "ulat/kernel.hpp"
#include "ulat/lgroup.hpp"
#include "ulat/metric.hpp"
#include "ulat/rational_line.hpp"
#include "ulat/real_entourage.hpp"
#include "ulat/separation.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace ulat;

void BM_TruncateFiniteLattice(benchmark::State& state) {
  const auto L = divisor_lattice(static_cast<unsigned long>(state.range(0)));
  const auto all = L.elements();
  const auto p = truncation_pair(L, all[1], L.join(all[1], all[all.size() / 2]));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncate_f(L, p, all[i]));
    i = (i + 1) % all.size();
  }
}
BENCHMARK(BM_TruncateFiniteLattice)->Arg(60)->Arg(360)->Arg(2310);

void BM_SplitDifferenceQ5(benchmark::State& state) {
  const RationalVectors Q(5);
  std::mt19937_64 rng(1);
  const auto x = Q.sample(rng), y = Q.sample(rng), a = abs_value(Q, Q.sample(rng));
  for (auto _ : state) benchmark::DoNotOptimize(l5_decompose(Q, x, y, a));
}
BENCHMARK(BM_SplitDifferenceQ5);

void BM_DistributivityScan(benchmark::State& state) {
  const auto L = powerset_lattice(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_distributive(L).distributive);
}
BENCHMARK(BM_DistributivityScan)->DenseRange(2, 5);

void BM_KernelPartition(benchmark::State& state) {
  const auto L = divisor_lattice(360);
  const FiniteFamily D("divisor360", {valuation_semimetric(L)});
  for (auto _ : state) benchmark::DoNotOptimize(kernel_partition(L, D).classes.size());
}
BENCHMARK(BM_KernelPartition);

void BM_SublatticeEnumeration(benchmark::State& state) {
  const auto L = powerset_lattice(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sublattices(L).size());
}
BENCHMARK(BM_SublatticeEnumeration);

void BM_EntourageComposition(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(real_entourage_compose_check(static_cast<std::uint64_t>(state.range(0)), 7, 1000));
}
BENCHMARK(BM_EntourageComposition)->Arg(1)->Arg(64);

void BM_VerifyO2Qline(benchmark::State& state) {
  const RationalLine Q;
  const auto seq = parse_rational_sequence("(-1)^k/k");
  const O2Witness<Rational> w{parse_rational_sequence("-1/k"), parse_rational_sequence("1/k"), AffineIndex{1, 0},
                              UpperFamily::chain};
  for (auto _ : state) benchmark::DoNotOptimize(verify_O2(Q, seq, Rational(0), w, 1000).status);
}
BENCHMARK(BM_VerifyO2Qline);

void BM_MetricConverges(benchmark::State& state) {
  const SemimetricFamily<Rational> D("qline", {abs_semimetric()});
  const auto seq = parse_rational_sequence("1/k");
  const MetricCertificate<Rational> cert{[](const Rational& eps, const LatticeSemimetric<Rational>&) {
    return static_cast<std::size_t>(ceil_of(Rational(1 / eps)).get_ui());
  }};
  const auto grid = default_eps_grid(10);
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(metric_converges(seq, Rational(0), D, cert, grid, horizon).status);
}
BENCHMARK(BM_MetricConverges)->Arg(1000)->Arg(10000);

void BM_UnboundedSeparation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unbounded_separation(50, 200).truncated_difference);
}
BENCHMARK(BM_UnboundedSeparation);

}  // namespace

BENCHMARK_MAIN();
