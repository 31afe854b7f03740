#include "ulat/metric.hpp"

namespace ulat {

std::vector<Rational> default_eps_grid(unsigned levels) {
  std::vector<Rational> grid;
  Rational eps(1);
  for (unsigned i = 0; i <= levels; ++i) {
    grid.push_back(eps);
    eps /= 2;
  }
  return grid;
}

namespace detail {

std::optional<std::size_t> qline_threshold(const ParityRational& form, const Rational& bound, bool upper) {
  using Outcome = SignDecision::Outcome;
  const RationalFunction b = RationalFunction::constant(bound);
  std::size_t K = 1;
  for (int p = 0; p < 2; ++p) {
    const RationalFunction t = (p == 0 ? form.even : form.odd).compose_affine(2, p);
    Integer u(p == 0 ? 1 : 0);
    for (int guard = 0;; ++guard) {
      if (guard > 1'000'000) return std::nullopt;
      const auto d = upper ? decide_leq_for_all(t, b, u) : decide_leq_for_all(b, t, u);
      if (d.outcome == Outcome::holds) break;
      if (d.outcome == Outcome::unknown || !d.counterexample) return std::nullopt;
      u = *d.counterexample + 1;
    }
    if (!u.fits_ulong_p()) return std::nullopt;
    K = std::max<std::size_t>(K, 2 * u.get_ui() + static_cast<std::size_t>(p));
  }
  return K;
}

}  // namespace detail

}  // namespace ulat
