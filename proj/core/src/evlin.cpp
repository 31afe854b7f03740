#include "ulat/evlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulat {

EvLinSeq::EvLinSeq(std::vector<Rational> prefix, Rational intercept, Rational slope)
    : prefix_(std::move(prefix)), intercept_(std::move(intercept)), slope_(std::move(slope)) {
  normalize();
}

Rational EvLinSeq::at(std::size_t i) const {
  if (i == 0) throw std::out_of_range("sequence indices start at 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return intercept_ + slope_ * Rational(static_cast<unsigned long>(i));
}

void EvLinSeq::normalize() {
  while (!prefix_.empty() &&
         prefix_.back() == intercept_ + slope_ * Rational(static_cast<unsigned long>(prefix_.size())))
    prefix_.pop_back();
}

EvLinSeq EvLinSeq::scaled(const Rational& k) const {
  std::vector<Rational> p;
  p.reserve(prefix_.size());
  for (const auto& q : prefix_) p.push_back(k * q);
  return EvLinSeq(std::move(p), k * intercept_, k * slope_);
}

std::ostream& operator<<(std::ostream& os, const EvLinSeq& s) {
  os << '(';
  for (const auto& q : s.prefix()) os << q.get_str() << ", ";
  return os << "... i -> " << s.intercept().get_str() << " + " << s.slope().get_str() << "*i)";
}

namespace {

void check_prefix(std::size_t n) {
  if (n > EvLinSeq::kMaxPrefix)
    throw std::length_error("eventually linear sequence would need a prefix of length " + std::to_string(n));
}

// Pointwise min (pick_min) or max of two eventually linear sequences.
EvLinSeq pointwise_extreme(const EvLinSeq& x, const EvLinSeq& y, bool pick_min) {
  std::size_t len = std::max(x.prefix().size(), y.prefix().size());
  Rational intercept, slope;
  if (x.slope() == y.slope()) {
    const bool x_smaller = x.intercept() <= y.intercept();
    const EvLinSeq& chosen = (x_smaller == pick_min) ? x : y;
    intercept = chosen.intercept();
    slope = chosen.slope();
  } else {
    // The two lines cross at t; past t the smaller slope is the smaller line.
    const Rational t = (y.intercept() - x.intercept()) / (x.slope() - y.slope());
    if (t > 0) {
      const Integer last = floor_of(t);
      if (!last.fits_ulong_p()) throw std::length_error("slope crossing too far out");
      check_prefix(last.get_ui());
      len = std::max<std::size_t>(len, last.get_ui());
    }
    const bool x_smaller_eventually = x.slope() < y.slope();
    const EvLinSeq& chosen = (x_smaller_eventually == pick_min) ? x : y;
    intercept = chosen.intercept();
    slope = chosen.slope();
  }
  check_prefix(len);
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) {
    auto a = x.at(i);
    auto b = y.at(i);
    prefix.push_back(pick_min ? min_of(a, b) : max_of(a, b));
  }
  return EvLinSeq(std::move(prefix), std::move(intercept), std::move(slope));
}

}  // namespace

EvLinSeq EventuallyLinearSequences::meet(const EvLinSeq& x, const EvLinSeq& y) const {
  return pointwise_extreme(x, y, true);
}

EvLinSeq EventuallyLinearSequences::join(const EvLinSeq& x, const EvLinSeq& y) const {
  return pointwise_extreme(x, y, false);
}

EvLinSeq EventuallyLinearSequences::add(const EvLinSeq& x, const EvLinSeq& y) const {
  const std::size_t len = std::max(x.prefix().size(), y.prefix().size());
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) prefix.push_back(x.at(i) + y.at(i));
  return EvLinSeq(std::move(prefix), x.intercept() + y.intercept(), x.slope() + y.slope());
}

ExtValue l1_norm(const EvLinSeq& s) {
  if (!s.eventually_zero()) return ExtValue::infinity();
  Rational sum = 0;
  for (const auto& q : s.prefix()) sum += abs_value(q);
  return ExtValue(sum);
}

}  // namespace ulat
