#pragma once

// Univariate polynomials and rational functions over Q, plus an exact
// decision procedure for sign conditions over all integers past a start
// index. This is the engine behind symbolic tail reasoning on the rational
// line.

#include "ulat/rational.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace ulat {

class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients from degree 0 upwards.
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  /// p(scale * x + offset)
  Polynomial compose_affine(const Rational& scale, const Rational& offset) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

enum class SignCondition { nonnegative, positive, nonzero };

struct SignDecision {
  enum class Outcome { holds, fails, unknown } outcome = Outcome::unknown;
  std::optional<Integer> counterexample;
};

/// Decides whether `p(j)` satisfies `cond` for every integer j >= start. Past
/// the Cauchy root bound the sign of p is that of its leading coefficient, so
/// only the integers below the bound are scanned; `scan_budget` caps that
/// scan and yields `unknown` when exceeded.
SignDecision decide_for_all_integers(const Polynomial& p, SignCondition cond, const Integer& start,
                                     unsigned long scan_budget = 1'000'000);

struct Limit {
  enum class Kind { finite, plus_infinity, minus_infinity } kind = Kind::finite;
  Rational value;
};

/// num / den with den not the zero polynomial.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::constant(1)) {}  // NOLINT
  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  /// Throws std::domain_error where the denominator vanishes.
  Rational operator()(const Rational& x) const;

  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Limit limit_at_infinity() const;
  RationalFunction compose_affine(const Rational& scale, const Rational& offset) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);

 private:
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

/// Decides `lhs(j) <= rhs(j)` for all integers j >= start, including the
/// requirement that both are defined there.
SignDecision decide_leq_for_all(const RationalFunction& lhs, const RationalFunction& rhs, const Integer& start);

/// Decides that r(k) <= r(k+1) (increasing) or r(k) >= r(k+1) for all k >= start.
SignDecision decide_monotone(const RationalFunction& r, bool increasing, const Integer& start);

}  // namespace ulat
