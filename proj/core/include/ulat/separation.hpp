#pragma once

// The sequence-space separation between truncated-norm convergence and
// convergence of |x_n - x| ^ a in the extended l1 norm, at x = (1, 2, 3, ...),
// x_n = x + e/n, a = k e.

#include "ulat/evlin.hpp"
#include "ulat/ext_value.hpp"
#include "ulat/verdict.hpp"

#include <cstdint>

namespace ulat {

struct SeparationRecord {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  /// || f_{-a,a}(x_n) - f_{-a,a}(x) ||_1
  Rational truncated_difference;
  /// k / n
  Rational bound;
  /// || |x_n - x| ^ a ||_1
  ExtValue unclamped;

  bool within_bound() const { return truncated_difference <= bound; }
};

SeparationRecord unbounded_separation(std::uint64_t k, std::uint64_t n);

struct SeparationReport {
  Verdict truncated;  // exact when every difference is within k/n
  Verdict unclamped;  // falsified (decided) when every value is +inf
  std::size_t cases = 0;
};

/// Every k in [1, k_max] and n in [1, n_max].
SeparationReport unbounded_separation_example(std::uint64_t k_max = 50, std::uint64_t n_max = 200);

}  // namespace ulat
