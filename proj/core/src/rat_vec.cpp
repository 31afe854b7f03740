#include "ulat/rat_vec.hpp"

#include <stdexcept>

namespace ulat {

std::ostream& operator<<(std::ostream& os, const RatVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i].get_str();
  return os << ')';
}

RationalVectors::RationalVectors(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("RationalVectors: dimension must be positive");
}

void RationalVectors::check(const Element& x) const {
  if (x.dim() != dim_)
    throw std::invalid_argument("vector of dimension " + std::to_string(x.dim()) + " does not belong to Q^" +
                                std::to_string(dim_));
}

namespace {

template <class Op>
RatVec zip(const RatVec& x, const RatVec& y, Op op) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(op(x[i], y[i]));
  return RatVec(std::move(out));
}

}  // namespace

RatVec RationalVectors::meet(const RatVec& x, const RatVec& y) const {
  check(x), check(y);
  return zip(x, y, [](const Rational& a, const Rational& b) { return min_of(a, b); });
}

RatVec RationalVectors::join(const RatVec& x, const RatVec& y) const {
  check(x), check(y);
  return zip(x, y, [](const Rational& a, const Rational& b) { return max_of(a, b); });
}

RatVec RationalVectors::add(const RatVec& x, const RatVec& y) const {
  check(x), check(y);
  return zip(x, y, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

RatVec RationalVectors::negate(const RatVec& x) const {
  check(x);
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (const auto& q : x.coords) out.push_back(-q);
  return RatVec(std::move(out));
}

CarrierInfo RationalVectors::info() const {
  return {"qvec" + std::to_string(dim_), CarrierKind::symbolic, true, false, true};
}

Rational l1_norm(const RatVec& v) {
  Rational s = 0;
  for (const auto& q : v.coords) s += abs_value(q);
  return s;
}

}  // namespace ulat
