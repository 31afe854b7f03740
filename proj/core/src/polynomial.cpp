#include "ulat/polynomial.hpp"

#include <stdexcept>

namespace ulat {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& offset) const {
  const Polynomial inner({offset, scale});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial::constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> c;
  c.reserve(a.coeffs_.size());
  for (const auto& q : a.coeffs_) c.push_back(-q);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    os << (first ? "" : " + ") << c.get_str();
    if (i > 0) os << "*k";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os;
}

namespace {

bool satisfies(const Rational& v, SignCondition cond) {
  switch (cond) {
    case SignCondition::nonnegative: return v >= 0;
    case SignCondition::positive: return v > 0;
    case SignCondition::nonzero: return v != 0;
  }
  return false;
}

}  // namespace

SignDecision decide_for_all_integers(const Polynomial& p, SignCondition cond, const Integer& start,
                                     unsigned long scan_budget) {
  using Outcome = SignDecision::Outcome;
  if (p.is_zero()) {
    if (cond == SignCondition::nonnegative) return {Outcome::holds, std::nullopt};
    return {Outcome::fails, start};
  }
  // Every real root lies in (-bound, bound).
  Rational bound = 0;
  const auto& c = p.coeffs();
  for (int i = 0; i < p.degree(); ++i) bound = max_of(bound, abs_value(c[static_cast<std::size_t>(i)] / p.leading()));
  bound += 1;

  const Integer last = floor_of(bound);
  if (last >= start) {
    const Integer span = last - start;
    if (span > Integer(scan_budget)) return {Outcome::unknown, std::nullopt};
  }
  for (Integer j = start; j <= last; ++j)
    if (!satisfies(p(Rational(j)), cond)) return {Outcome::fails, j};

  // Beyond `last` there are no roots, so the sign is that of the leading coefficient.
  if (satisfies(p.leading(), cond)) return {Outcome::holds, std::nullopt};
  const Integer witness = last + 1 > start ? Integer(last + 1) : start;
  return {Outcome::fails, witness};
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  // Normalise so the denominator is monic; keeps printing and equality tame.
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_ * Polynomial::constant(1 / lead);
    den_ = den_ * Polynomial::constant(1 / lead);
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw std::domain_error("rational function undefined at " + x.get_str());
  return num_(x) / d;
}

Limit RationalFunction::limit_at_infinity() const {
  if (num_.is_zero() || num_.degree() < den_.degree()) return {Limit::Kind::finite, Rational(0)};
  if (num_.degree() == den_.degree()) return {Limit::Kind::finite, num_.leading() / den_.leading()};
  const bool positive = (num_.leading() > 0) == (den_.leading() > 0);
  return {positive ? Limit::Kind::plus_infinity : Limit::Kind::minus_infinity, Rational(0)};
}

RationalFunction RationalFunction::compose_affine(const Rational& scale, const Rational& offset) const {
  return RationalFunction(num_.compose_affine(scale, offset), den_.compose_affine(scale, offset));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
  if (r.den().degree() == 0) return os << r.num();
  return os << "(" << r.num() << ")/(" << r.den() << ")";
}

SignDecision decide_leq_for_all(const RationalFunction& lhs, const RationalFunction& rhs, const Integer& start) {
  using Outcome = SignDecision::Outcome;
  for (const auto* den : {&lhs.den(), &rhs.den()}) {
    auto defined = decide_for_all_integers(*den, SignCondition::nonzero, start);
    if (defined.outcome != Outcome::holds) return defined;
  }
  // rhs - lhs = N / D  and  N / D >= 0  <=>  N * D >= 0 when D != 0.
  const RationalFunction diff = rhs - lhs;
  return decide_for_all_integers(diff.num() * diff.den(), SignCondition::nonnegative, start);
}

SignDecision decide_monotone(const RationalFunction& r, bool increasing, const Integer& start) {
  const RationalFunction next = r.compose_affine(1, 1);
  return increasing ? decide_leq_for_all(r, next, start) : decide_leq_for_all(next, r, start);
}

}  // namespace ulat
