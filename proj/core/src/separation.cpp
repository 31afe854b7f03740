#include "ulat/separation.hpp"

#include <stdexcept>
#include <string>

namespace ulat {

SeparationRecord unbounded_separation(std::uint64_t k, std::uint64_t n) {
  if (k == 0 || n == 0) throw std::invalid_argument("unbounded_separation needs k, n >= 1");
  const EventuallyLinearSequences S;
  const EvLinSeq x = EvLinSeq::identity_ramp();
  const EvLinSeq e = EvLinSeq::constant(1);
  const Rational kq(static_cast<unsigned long>(k));
  const Rational nq(static_cast<unsigned long>(n));
  const EvLinSeq xn = S.add(x, e.scaled(1 / nq));
  const EvLinSeq a = e.scaled(kq);
  const EvLinSeq minus_a = S.negate(a);
  auto clamp = [&](const EvLinSeq& v) { return S.join(S.meet(v, a), minus_a); };

  SeparationRecord r;
  r.k = k;
  r.n = n;
  const ExtValue diff = l1_norm(S.add(clamp(xn), S.negate(clamp(x))));
  if (diff.is_infinite()) throw std::logic_error("truncated difference is not eventually zero");
  r.truncated_difference = diff.finite();
  r.bound = kq / nq;
  const EvLinSeq gap = S.add(xn, S.negate(x));
  const EvLinSeq abs_gap = S.join(gap, S.negate(gap));
  r.unclamped = l1_norm(S.meet(abs_gap, a));
  return r;
}

SeparationReport unbounded_separation_example(std::uint64_t k_max, std::uint64_t n_max) {
  SeparationReport rep;
  rep.truncated = Verdict::exact("||f_{-a,a}(x_n) - f_{-a,a}(x)|| <= k/n for all k <= " + std::to_string(k_max) +
                                 ", n <= " + std::to_string(n_max));
  rep.unclamped = Verdict::falsified("|| |x_n - x| ^ a || = inf for every tested (k, n)", std::nullopt, true);
  for (std::uint64_t k = 1; k <= k_max; ++k)
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const auto r = unbounded_separation(k, n);
      ++rep.cases;
      if (!r.within_bound() && rep.truncated.accepted())
        rep.truncated = Verdict::falsified("k=" + std::to_string(k) + ", n=" + std::to_string(n) + ": " +
                                               to_string(r.truncated_difference) + " > " + to_string(r.bound),
                                           static_cast<std::size_t>(n), true);
      if (!r.unclamped.is_infinite() && rep.unclamped.is_falsified())
        rep.unclamped = Verdict::inconclusive("finite value " + r.unclamped.str() + " at k=" + std::to_string(k) +
                                              ", n=" + std::to_string(n));
    }
  return rep;
}

}  // namespace ulat
