#include "ulat/lab/examples.hpp"

#include "ulat/catalog.hpp"
#include "ulat/convergence.hpp"
#include "ulat/metric.hpp"
#include "ulat/real_entourage.hpp"
#include "ulat/separation.hpp"

#include <sstream>

namespace ulat::lab {

namespace {

ExampleOutput example_ex_r() {
  std::ostringstream os;
  bool ok = true;
  os << "U_n = {(x, y) : |x - y| <= 1/n, or x, y >= n, or x, y <= -n} on the rational line\n\n";
  const Verdict comp = real_entourage_compose_check(4);
  os << "U_8 o U_8 within U_4: " << comp << "\n";
  ok = ok && comp.accepted();
  const Verdict neg = entourage_composition_check(2, 2, 1, 1'000);
  os << "U_2 o U_2 within U_2: " << neg << "\n";
  ok = ok && neg.is_falsified();

  const RationalLine Q;
  const auto ramp = rational_sequence("k", ParityRational::uniform(RationalFunction::variable()));
  const SemimetricFamily<Rational> absfam("qline", {abs_semimetric()});
  std::vector<TruncationPair<Rational>> J;
  for (long n = 1; n <= 8; ++n) J.push_back(truncation_pair(Q, Rational(-n), Rational(n)));
  const auto ustar = ustar_family(Q, absfam, J);
  const Verdict cauchy_star = metric_cauchy<Rational>(ramp, ustar, std::nullopt, default_eps_grid(), 1'000);
  const Verdict cauchy_abs = metric_cauchy<Rational>(ramp, absfam, std::nullopt, default_eps_grid(), 1'000);
  os << "\nx_k = k, Cauchy under u* (d_{-n,n}, n <= 8): " << cauchy_star << "\n";
  os << "x_k = k, Cauchy under |.|: " << cauchy_abs << "\n";
  ok = ok && cauchy_star.is_exact() && cauchy_abs.is_falsified();

  os << "\nx_k = k has no limit for u*:\n";
  for (const Rational& r : {Rational(0), Rational(100), rat(-7, 2)}) {
    const Verdict v = ustar_nonconvergence_on_line(r);
    os << "  r = " << ulat::to_string(r) << ": " << v << "\n";
    ok = ok && v.is_exact();
  }
  os << "\nu is complete, u* is not: x_k = k is u*-Cauchy without a u*-limit.\n";
  return {os.str(), ok};
}

ExampleOutput example_ex() {
  std::ostringstream os;
  bool ok = true;
  os << "x = (1, 2, 3, ...), e = (1, 1, ...), x_n = x + e/n, a = k e, extended l1 norm\n\n";
  os << "   k      n   ||f_{-a,a}(x_n) - f_{-a,a}(x)||   k/n    |||x_n - x| ^ a||\n";
  for (auto [k, n] : {std::pair<std::uint64_t, std::uint64_t>{1, 1}, {3, 200}, {50, 10'000}}) {
    const auto r = unbounded_separation(k, n);
    os << "  " << k << "  " << n << "   " << ulat::to_string(r.truncated_difference) << "   " << ulat::to_string(r.bound) << "   "
       << r.unclamped << "\n";
    ok = ok && r.within_bound() && r.unclamped.is_infinite();
  }
  const auto rep = unbounded_separation_example();
  os << "\nall k <= 50, n <= 200 (" << rep.cases << " cases):\n";
  os << "  truncated differences within k/n: " << rep.truncated << "\n";
  os << "  |x_n - x| ^ a tends to 0 in norm: " << rep.unclamped << "\n";
  ok = ok && rep.truncated.is_exact() && rep.unclamped.is_falsified();
  os << "\nx_n converges to x for sigma but not for the unbounded norm topology.\n";
  return {os.str(), ok};
}

ExampleOutput example_o1o2() {
  std::ostringstream os;
  const FinCofAlgebra A;
  const auto seq = fincof_sequence("{x_k}", {FinCofShape::Kind::singleton, 0});
  const auto lower = constant_sequence<FinCofSet>("{}", FinCofSet::empty());
  const auto chain = fincof_sequence("X \\ {x_1..x_j}", {FinCofShape::Kind::co_initial_segment, 0});
  const O2Witness<FinCofSet> w{lower, chain, AffineIndex{1, 1}, UpperFamily::all_cofinite_sets};
  os << "Finite/cofinite subsets of an uncountable X, A_k = {x_k} with distinct points x_k\n\n";
  os << "first terms: ";
  for (std::size_t k = 1; k <= 4; ++k) os << seq(k) << " ";
  os << "...\n";
  const Verdict o2 = verify_O2(A, seq, FinCofSet::empty(), w);
  const Verdict o1 = decide_O1_eventual_constancy(A, seq, FinCofSet::empty());
  os << "O2 to the empty set (M = {empty}, N = all cofinite sets): " << o2 << "\n";
  os << "O1 (eventual constancy): " << o1 << "\n";
  const bool ok = o2.is_exact() && o1.is_falsified() && o1.decided;
  os << "\nThe sequence O2-converges to the empty set but is not O1-convergent.\n";
  return {os.str(), ok};
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"ex", "ex-r", "o1o2"};
  return names;
}

ExampleOutput run_example(std::string_view name) {
  if (name == "ex-r") return example_ex_r();
  if (name == "ex") return example_ex();
  if (name == "o1o2") return example_o1o2();
  throw std::invalid_argument("unknown example '" + std::string(name) + "' (expected ex-r, ex or o1o2)");
}

}  // namespace ulat::lab
