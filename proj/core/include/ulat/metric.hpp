#pragma once

// Convergence and Cauchy checks through generating semimetrics, backed by an
// epsilon -> N certificate.

#include "ulat/bounds.hpp"
#include "ulat/convergence.hpp"
#include "ulat/semimetric.hpp"

#include <functional>
#include <string>
#include <type_traits>
#include <vector>

namespace ulat {

/// modulus(eps, d) = N with d(x_k, limit) <= eps (or d(x_j, x_k) <= eps) for k >= N.
template <class E>
struct MetricCertificate {
  std::function<std::size_t(const Rational& eps, const LatticeSemimetric<E>& d)> modulus;
};

/// {1, 1/2, 1/4, ..., 2^-levels}
std::vector<Rational> default_eps_grid(unsigned levels = 10);

template <class E>
Verdict metric_converges(const SequenceFamily<E>& seq, const E& x, const SemimetricFamily<E>& D,
                         const MetricCertificate<E>& cert, const std::vector<Rational>& eps_grid,
                         std::size_t horizon = kDefaultHorizon) {
  if (eps_grid.empty()) throw std::invalid_argument("metric_converges: empty epsilon grid");
  for (const auto& d : D) {
    std::vector<std::size_t> from;
    std::size_t earliest = horizon + 1;
    for (const auto& eps : eps_grid) {
      if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
      from.push_back(std::max<std::size_t>(cert.modulus(eps, d), 1));
      earliest = std::min(earliest, from.back());
    }
    for (std::size_t k = earliest; k <= horizon; ++k) {
      const ExtValue v = d(seq(k), x);
      for (std::size_t e = 0; e < eps_grid.size(); ++e)
        if (k >= from[e] && v > ExtValue(eps_grid[e]))
          return Verdict::falsified(d.name + "(x_" + std::to_string(k) + ", x) = " + v.str() + " > " +
                                        to_string(eps_grid[e]) + " past N=" + std::to_string(from[e]),
                                    k);
    }
  }
  return Verdict::verified(horizon, std::to_string(D.size()) + " semimetrics x " + std::to_string(eps_grid.size()) +
                                        " tolerances");
}

namespace detail {

/// Smallest K with lower_bound <= x_k for every k >= K (upper == false) or
/// x_k <= bound (upper == true), from parity descriptors.
std::optional<std::size_t> qline_threshold(const ParityRational& form, const Rational& bound, bool upper);

/// Cauchy by clamping: every member is d_{a,b} and x_k -> +inf or -inf, so
/// eventually all f_{a,b}(x_k) equal b (or a) and every distance vanishes.
template <class E>
std::optional<Verdict> clamp_cauchy(const SequenceFamily<E>& seq, const SemimetricFamily<E>& D) {
  if constexpr (!std::is_same_v<E, Rational>) {
    return std::nullopt;
  } else {
    const auto form = as_parity_rational(seq);
    if (!form) return std::nullopt;
    const Limit le = form->even.limit_at_infinity();
    const Limit lo = form->odd.limit_at_infinity();
    if (le.kind != lo.kind || le.kind == Limit::Kind::finite) return std::nullopt;
    const bool up = le.kind == Limit::Kind::plus_infinity;
    std::string detail = "clamped tails:";
    for (const auto& d : D) {
      if (!d.truncation) return std::nullopt;
      const Rational& bound = up ? d.truncation->b : d.truncation->a;
      const auto K = qline_threshold(*form, bound, !up);
      if (!K) return std::nullopt;
      detail += " " + d.name + " from k=" + std::to_string(*K) + ";";
    }
    return Verdict::exact(detail);
  }
}

}  // namespace detail

/// Pairwise check d(x_j, x_k) <= eps for j, k >= N(eps). Verification uses
/// the anchor bound d(x_N, x_k) <= eps/2 (which implies the pairwise bound);
/// when the anchor fails, up to `pair_budget` pairs are searched for a real
/// violation. Sequences on the rational line tending to infinity are decided
/// exactly under families of derived semimetrics.
template <class E>
Verdict metric_cauchy(const SequenceFamily<E>& seq, const SemimetricFamily<E>& D,
                      const std::optional<MetricCertificate<E>>& cert, const std::vector<Rational>& eps_grid,
                      std::size_t horizon = kDefaultHorizon, std::size_t pair_budget = 2'000'000) {
  if (auto v = detail::clamp_cauchy(seq, D)) return *v;
  if (eps_grid.empty()) throw std::invalid_argument("metric_cauchy: empty epsilon grid");
  Verdict out = Verdict::verified(horizon, "anchor bound eps/2");
  std::size_t budget = pair_budget;
  for (const auto& d : D)
    for (const auto& eps : eps_grid) {
      if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
      const std::size_t N = cert ? std::max<std::size_t>(cert->modulus(eps, d), 1) : 1;
      if (N > horizon) {
        out = weakest(out, Verdict::inconclusive("certificate index beyond the horizon"));
        continue;
      }
      const ExtValue half(Rational(eps / 2));
      const ExtValue full(eps);
      const E anchor = seq(N);
      std::optional<std::size_t> bad;
      for (std::size_t k = N + 1; k <= horizon; ++k) {
        const ExtValue v = d(anchor, seq(k));
        if (v > full)
          return Verdict::falsified(d.name + "(x_" + std::to_string(N) + ", x_" + std::to_string(k) + ") = " +
                                        v.str() + " > " + to_string(eps),
                                    k);
        if (v > half && !bad) bad = k;
      }
      if (!bad) continue;
      // The anchor bound failed without a violation at the anchor: search pairs.
      bool found_all = true;
      for (std::size_t j = N + 1; j <= horizon && found_all; ++j) {
        const E xj = seq(j);
        for (std::size_t k = j + 1; k <= horizon; ++k) {
          if (budget == 0) {
            found_all = false;
            break;
          }
          --budget;
          const ExtValue v = d(xj, seq(k));
          if (v > full)
            return Verdict::falsified(d.name + "(x_" + std::to_string(j) + ", x_" + std::to_string(k) + ") = " +
                                          v.str() + " > " + to_string(eps),
                                      k);
        }
      }
      if (!found_all) out = weakest(out, Verdict::inconclusive("pair search budget exhausted"));
    }
  return out;
}

/// Cauchy probe for a monotone sequence (throws std::invalid_argument on a
/// non-monotone input). A falsified verdict exhibits a monotone non-Cauchy
/// sequence, i.e. non-exhaustivity of the generated uniformity.
template <Lattice C>
Verdict exhaustivity_probe(const C& c, const SequenceFamily<element_t<C>>& seq,
                           const SemimetricFamily<element_t<C>>& D,
                           const std::optional<MetricCertificate<element_t<C>>>& cert,
                           const std::vector<Rational>& eps_grid, std::size_t horizon = kDefaultHorizon) {
  const Verdict inc = chain_monotone(c, seq, true, 1, horizon);
  if (inc.is_falsified()) {
    const Verdict dec = chain_monotone(c, seq, false, 1, horizon);
    if (dec.is_falsified()) throw std::invalid_argument("exhaustivity_probe: '" + seq.name + "' is not monotone");
  }
  return metric_cauchy(seq, D, cert, eps_grid, horizon);
}

}  // namespace ulat
