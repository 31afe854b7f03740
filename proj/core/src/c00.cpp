#include "ulat/c00.hpp"

#include <set>

namespace ulat {

C00Vector::C00Vector(std::map<std::uint64_t, Rational> entries) {
  for (auto& [i, q] : entries) {
    if (i == 0) throw std::invalid_argument("c00 indices start at 1");
    if (q != 0) entries_.emplace(i, std::move(q));
  }
}

C00Vector C00Vector::unit(std::uint64_t index, const Rational& value) { return C00Vector({{index, value}}); }

Rational C00Vector::at(std::uint64_t index) const {
  const auto it = entries_.find(index);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::optional<std::uint64_t> C00Vector::support_max() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first;
}

std::ostream& operator<<(std::ostream& os, const C00Vector& v) {
  os << '{';
  bool first = true;
  for (const auto& [i, q] : v.entries()) {
    os << (first ? "" : ", ") << i << ":" << q.get_str();
    first = false;
  }
  return os << '}';
}

namespace {

template <class Op>
C00Vector merge(const C00Vector& x, const C00Vector& y, Op op) {
  std::set<std::uint64_t> support;
  for (const auto& [i, q] : x.entries()) support.insert(i);
  for (const auto& [i, q] : y.entries()) support.insert(i);
  std::map<std::uint64_t, Rational> out;
  for (auto i : support) out.emplace(i, op(x.at(i), y.at(i)));
  return C00Vector(std::move(out));
}

}  // namespace

C00Vector FinitelySupportedSequences::meet(const C00Vector& x, const C00Vector& y) const {
  return merge(x, y, [](const Rational& a, const Rational& b) { return min_of(a, b); });
}

C00Vector FinitelySupportedSequences::join(const C00Vector& x, const C00Vector& y) const {
  return merge(x, y, [](const Rational& a, const Rational& b) { return max_of(a, b); });
}

C00Vector FinitelySupportedSequences::add(const C00Vector& x, const C00Vector& y) const {
  return merge(x, y, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

C00Vector FinitelySupportedSequences::negate(const C00Vector& x) const {
  std::map<std::uint64_t, Rational> out;
  for (const auto& [i, q] : x.entries()) out.emplace(i, -q);
  return C00Vector(std::move(out));
}

}  // namespace ulat
