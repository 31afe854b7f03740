#pragma once

#include "ulat/ext_value.hpp"
#include "ulat/lattice.hpp"
#include "ulat/rational.hpp"

#include <cstddef>
#include <ostream>
#include <random>
#include <vector>

namespace ulat {

/// Real sequence (s_1, s_2, ...) that is eventually affine in the index:
/// s_i = prefix[i-1] for i <= prefix.size(), and s_i = intercept + slope*i
/// afterwards. The prefix is kept minimal, so equality is structural.
class EvLinSeq {
 public:
  EvLinSeq() = default;
  EvLinSeq(std::vector<Rational> prefix, Rational intercept, Rational slope);

  /// c*(1, 1, 1, ...)
  static EvLinSeq constant(const Rational& c) { return EvLinSeq({}, c, 0); }
  /// (1, 2, 3, ...)
  static EvLinSeq identity_ramp() { return EvLinSeq({}, 0, 1); }

  Rational at(std::size_t i) const;
  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& intercept() const { return intercept_; }
  const Rational& slope() const { return slope_; }
  bool eventually_zero() const { return intercept_ == 0 && slope_ == 0; }

  EvLinSeq scaled(const Rational& k) const;

  friend bool operator==(const EvLinSeq&, const EvLinSeq&) = default;

  /// Largest prefix the representation will materialise before giving up.
  static constexpr std::size_t kMaxPrefix = std::size_t{1} << 20;

 private:
  void normalize();

  std::vector<Rational> prefix_;
  Rational intercept_ = 0;
  Rational slope_ = 0;
};

std::ostream& operator<<(std::ostream& os, const EvLinSeq& s);

/// Closure of {(1,2,3,...), (1,1,1,...)} under the l-group operations, as an
/// exactly representable sub-l-group of R^N.
class EventuallyLinearSequences {
 public:
  using Element = EvLinSeq;

  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const { return x.scaled(-1); }
  Element zero() const { return {}; }

  CarrierInfo info() const { return {"evlin", CarrierKind::symbolic, true, false, true}; }

  template <class Rng>
  Element sample(Rng& rng) const {
    std::uniform_int_distribution<int> len(0, 3);
    std::vector<Rational> prefix;
    for (int n = len(rng); n > 0; --n) prefix.push_back(random_rational(rng));
    return EvLinSeq(std::move(prefix), random_rational(rng, 6, 3), random_rational(rng, 3, 2));
  }
};

/// sum_i |s_i|; +inf unless the sequence is eventually zero.
ExtValue l1_norm(const EvLinSeq& s);

}  // namespace ulat
