#pragma once

// Constructive extraction of an FO1-convergent subnet from per-truncation O2
// witnesses, along a cofinal chain that advances every witness chain by one
// step at a time.

#include "ulat/convergence.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ulat {

template <class E>
struct SubnetBounds {
  E lower;  // m
  E value;  // f(x_phi)
  E upper;  // n
};

template <class E>
struct SubnetStep {
  std::size_t phi = 0;                   // index into the original sequence
  std::vector<SubnetBounds<E>> bounds;   // one entry per truncation
};

template <class E>
struct SubnetEnumeration {
  std::vector<TruncationPair<E>> truncations;
  std::vector<SubnetStep<E>> steps;
};

/// A witness chain failed to contain the image sequence where the
/// construction needed it.
class SubnetError : public std::runtime_error {
 public:
  SubnetError(const std::string& what, std::size_t truncation, std::size_t j, std::size_t k)
      : std::runtime_error(what), truncation_(truncation), j_(j), k_(k) {}
  std::size_t truncation() const { return truncation_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t truncation_;
  std::size_t j_;
  std::size_t k_;
};

/// Step i advances every witness chain to index i and picks
/// phi_i = max(max_f K_f(i), phi_{i-1} + 1), then checks
/// m_{f,i} <= f(x_{phi_i}) <= n_{f,i} exactly.
template <Lattice C>
SubnetEnumeration<element_t<C>> build_subnet(const C& c, const SequenceFamily<element_t<C>>& seq,
                                             const std::vector<TruncationPair<element_t<C>>>& F,
                                             const std::vector<O2Witness<element_t<C>>>& witnesses,
                                             std::size_t steps) {
  using E = element_t<C>;
  if (F.empty()) throw std::invalid_argument("build_subnet: empty truncation list");
  if (F.size() != witnesses.size()) throw std::invalid_argument("build_subnet: one witness per truncation required");
  SubnetEnumeration<E> out{F, {}};
  out.steps.reserve(steps);
  std::size_t phi = 0;
  for (std::size_t i = 1; i <= steps; ++i) {
    std::size_t next = phi + 1;
    for (const auto& w : witnesses) next = std::max(next, w.eventual(i));
    phi = next;
    SubnetStep<E> step{phi, {}};
    const E x = seq(phi);
    for (std::size_t f = 0; f < F.size(); ++f) {
      const E m = witnesses[f].lower(i);
      const E n = witnesses[f].upper(i);
      const E v = truncate_f(c, F[f], x);
      if (!leq(c, m, v) || !leq(c, v, n))
        throw SubnetError("truncation #" + std::to_string(f) + ": f(x_" + std::to_string(phi) + ") = " +
                              describe(c, v) + " outside [m_" + std::to_string(i) + ", n_" + std::to_string(i) + "]",
                          f, i, phi);
      step.bounds.push_back({m, v, n});
    }
    out.steps.push_back(std::move(step));
  }
  return out;
}

/// Re-checks an enumeration: per-truncation lower bounds increase, upper
/// bounds decrease, the sandwich holds, and phi is strictly increasing (so
/// phi_i >= i and every index is eventually passed). Exhaustive over the
/// prefix.
template <Lattice C>
Verdict check_subnet_invariants(const C& c, const SubnetEnumeration<element_t<C>>& e) {
  const auto& s = e.steps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].phi < i + 1) return Verdict::falsified("phi_" + std::to_string(i + 1) + " < " + std::to_string(i + 1), i + 1, true);
    if (i > 0 && s[i].phi <= s[i - 1].phi)
      return Verdict::falsified("phi not strictly increasing at step " + std::to_string(i + 1), i + 1, true);
    for (std::size_t f = 0; f < s[i].bounds.size(); ++f) {
      const auto& b = s[i].bounds[f];
      if (!leq(c, b.lower, b.value) || !leq(c, b.value, b.upper))
        return Verdict::falsified("sandwich fails for truncation #" + std::to_string(f), i + 1, true);
      if (i > 0) {
        const auto& prev = s[i - 1].bounds[f];
        if (!leq(c, prev.lower, b.lower))
          return Verdict::falsified("lower bounds decrease for truncation #" + std::to_string(f), i + 1, true);
        if (!leq(c, b.upper, prev.upper))
          return Verdict::falsified("upper bounds increase for truncation #" + std::to_string(f), i + 1, true);
      }
    }
  }
  return Verdict::exact(std::to_string(s.size()) + " steps");
}

}  // namespace ulat
