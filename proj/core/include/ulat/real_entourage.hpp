#pragma once

// The base U_n = {(x, y) : |x - y| <= 1/n, or x, y >= n, or x, y <= -n} of u*
// on the rational line, with exact checks of its uniformity axioms and of
// the non-convergence of x_k = k.

#include "ulat/rational.hpp"
#include "ulat/verdict.hpp"

#include <cstdint>

namespace ulat {

bool real_entourage_contains(std::uint64_t n, const Rational& x, const Rational& y);

/// Checks U_inner o U_inner within U_outer by exact case analysis over the
/// nine clause combinations, then on `samples` seeded random triples. A
/// failing combination yields a concrete (x, y, z) witness.
Verdict entourage_composition_check(std::uint64_t inner, std::uint64_t outer, std::uint64_t seed = 1,
                                    std::size_t samples = 10'000);

/// U_{2n} o U_{2n} within U_n, plus U_{2n} v (x, x) and U_{2n} ^ (x, x)
/// within U_n on sampled triples.
Verdict real_entourage_compose_check(std::uint64_t n, std::uint64_t seed = 1, std::size_t samples = 10'000);

/// Exact proof that x_k = k does not converge to r for the U_n base: picks
/// n = floor(|r|) + 2 and shows (k, r) is outside U_n for every k >= n + 1.
/// The chosen n is recorded in the verdict detail as "n=<n>".
Verdict ustar_nonconvergence_on_line(const Rational& r);

/// x_k = k is Cauchy for the U_n base: for every n and all j, k >= n the pair
/// satisfies the clause "both >= n". Exact for every n in [1, n_max].
Verdict ramp_ustar_cauchy(std::uint64_t n_max);

}  // namespace ulat
