#pragma once

#include "ulat/lattice.hpp"
#include "ulat/rational.hpp"

namespace ulat {

/// The rational line as a totally ordered l-group.
class RationalLine {
 public:
  using Element = Rational;

  Element meet(const Element& x, const Element& y) const { return min_of(x, y); }
  Element join(const Element& x, const Element& y) const { return max_of(x, y); }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element negate(const Element& x) const { return -x; }
  Element zero() const { return Rational(0); }

  CarrierInfo info() const { return {"qline", CarrierKind::symbolic, true, false, true}; }

  template <class Rng>
  Element sample(Rng& rng) const {
    return random_rational(rng);
  }
};

}  // namespace ulat
