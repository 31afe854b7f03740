#pragma once

#include "ulat/lattice.hpp"
#include "ulat/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>

namespace ulat {

/// Finitely supported rational sequence, indices starting at 1. Zero
/// coordinates are never stored, so equality is structural.
class C00Vector {
 public:
  C00Vector() = default;
  explicit C00Vector(std::map<std::uint64_t, Rational> entries);

  static C00Vector unit(std::uint64_t index, const Rational& value = Rational(1));

  Rational at(std::uint64_t index) const;
  const std::map<std::uint64_t, Rational>& entries() const { return entries_; }
  /// Largest index with a nonzero coordinate.
  std::optional<std::uint64_t> support_max() const;

  friend bool operator==(const C00Vector&, const C00Vector&) = default;

 private:
  std::map<std::uint64_t, Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const C00Vector& v);

class FinitelySupportedSequences {
 public:
  using Element = C00Vector;

  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  Element zero() const { return {}; }

  CarrierInfo info() const { return {"c00", CarrierKind::symbolic, true, false, true}; }

  template <class Rng>
  Element sample(Rng& rng) const {
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<std::uint64_t> index(1, 8);
    std::map<std::uint64_t, Rational> e;
    for (int n = count(rng); n > 0; --n) e[index(rng)] = random_rational(rng);
    return C00Vector(std::move(e));
  }

  template <class Rng>
  Element sample_positive(Rng& rng) const {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<std::uint64_t> index(1, 8);
    std::map<std::uint64_t, Rational> e;
    for (int n = count(rng); n > 0; --n) e[index(rng)] = random_nonnegative(rng);
    return C00Vector(std::move(e));
  }
};

}  // namespace ulat
