#pragma once

#include "ulat/rational.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ulat {

/// A nonnegative rational or +inf.
class ExtValue {
 public:
  ExtValue() : value_(Rational(0)) {}
  ExtValue(const Rational& q) : value_(q) {  // NOLINT(google-explicit-constructor)
    if (q < 0) throw std::domain_error("ExtValue must be nonnegative, got " + to_string(q));
  }
  ExtValue(long n) : ExtValue(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static ExtValue infinity() {
    ExtValue v;
    v.value_.reset();
    return v;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_zero() const { return value_.has_value() && *value_ == 0; }

  /// Finite value; throws on +inf.
  const Rational& finite() const {
    if (!value_) throw std::logic_error("ExtValue::finite() on +inf");
    return *value_;
  }

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtValue(Rational(*a.value_ + *b.value_));
  }

  friend ExtValue operator*(const Rational& k, const ExtValue& a) {
    if (k < 0) throw std::domain_error("negative scale for ExtValue");
    if (a.is_infinite()) return k == 0 ? ExtValue() : infinity();
    return ExtValue(Rational(k * *a.value_));
  }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    const int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// "p/q" or "inf".
  std::string str() const { return is_infinite() ? std::string("inf") : to_string(*value_); }

  /// Accepts the forms produced by str().
  static ExtValue parse(std::string_view text) {
    if (text == "inf" || text == "+inf") return infinity();
    return ExtValue(parse_rational(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.str(); }

 private:
  std::optional<Rational> value_;
};

}  // namespace ulat
