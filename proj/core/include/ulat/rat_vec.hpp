#pragma once

#include "ulat/lattice.hpp"
#include "ulat/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <vector>

namespace ulat {

struct RatVec {
  std::vector<Rational> coords;

  RatVec() = default;
  explicit RatVec(std::vector<Rational> c) : coords(std::move(c)) {}
  RatVec(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  friend bool operator==(const RatVec&, const RatVec&) = default;
};

std::ostream& operator<<(std::ostream& os, const RatVec& v);

/// Q^n with the coordinatewise order.
class RationalVectors {
 public:
  using Element = RatVec;

  explicit RationalVectors(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Element meet(const Element& x, const Element& y) const;
  Element join(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  Element zero() const { return RatVec(std::vector<Rational>(dim_, Rational(0))); }

  CarrierInfo info() const;

  template <class Rng>
  Element sample(Rng& rng) const {
    std::vector<Rational> c;
    c.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c.push_back(random_rational(rng));
    return RatVec(std::move(c));
  }

  template <class Rng>
  Element sample_positive(Rng& rng) const {
    std::vector<Rational> c;
    c.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c.push_back(random_nonnegative(rng));
    return RatVec(std::move(c));
  }

 private:
  void check(const Element& x) const;
  std::size_t dim_;
};

Rational l1_norm(const RatVec& v);

}  // namespace ulat
