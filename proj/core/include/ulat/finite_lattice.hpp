#pragma once

#include "ulat/lattice.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ulat {

/// Raised when an order or table does not define a lattice. `first`/`second`
/// name the offending pair.
class NotALatticeError : public std::invalid_argument {
 public:
  NotALatticeError(const std::string& what, std::string first, std::string second)
      : std::invalid_argument(what), first_(std::move(first)), second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

/// Lattice given by explicit meet/join tables over named elements.
class FiniteLattice {
 public:
  struct Element {
    std::uint32_t index = 0;
    friend auto operator<=>(const Element&, const Element&) = default;
  };

  /// `order[i][j]` is i <= j. The relation is closed reflexively and
  /// transitively before validation.
  static FiniteLattice from_order(std::string name, std::vector<std::string> names,
                                  std::vector<std::vector<bool>> order);

  /// Covering pairs (lo, hi) by index.
  static FiniteLattice from_covers(std::string name, std::vector<std::string> names,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  /// Explicit tables indexed [i * n + j]; validated against the lattice axioms.
  static FiniteLattice from_tables(std::string name, std::vector<std::string> names,
                                   std::vector<std::uint32_t> meet, std::vector<std::uint32_t> join);

  Element meet(Element x, Element y) const { return Element{meet_[slot(x, y)]}; }
  Element join(Element x, Element y) const { return Element{join_[slot(x, y)]}; }

  CarrierInfo info() const {
    return {name_, CarrierKind::finite_table, distributive_, bottom_.has_value() && top_.has_value(), false};
  }

  std::vector<Element> elements() const;
  std::size_t size() const { return names_.size(); }
  const std::string& name() const { return name_; }
  const std::string& element_name(Element x) const { return names_.at(checked(x)); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Element> find(std::string_view element_name) const;
  /// Like find(), but throws std::out_of_range for unknown names.
  Element at(std::string_view element_name) const;
  Element element(std::size_t index) const;

  std::optional<Element> bottom() const { return bottom_; }
  std::optional<Element> top() const { return top_; }

  /// Covering pairs (lo, hi) of the order, sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  template <class Rng>
  Element sample(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(size() - 1));
    return Element{pick(rng)};
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.meet_ == b.meet_ && a.join_ == b.join_;
  }

 private:
  FiniteLattice(std::string name, std::vector<std::string> names, std::vector<std::uint32_t> meet,
                std::vector<std::uint32_t> join);

  std::size_t checked(Element x) const {
    if (x.index >= names_.size())
      throw std::out_of_range("element #" + std::to_string(x.index) + " does not belong to carrier '" + name_ + "'");
    return x.index;
  }
  std::size_t slot(Element x, Element y) const { return checked(x) * names_.size() + checked(y); }

  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::optional<Element> bottom_;
  std::optional<Element> top_;
  bool distributive_ = false;
};

/// Subsets of {1..n}, ordered by inclusion. Element index = bitmask.
FiniteLattice powerset_lattice(unsigned n);
/// Positive divisors of n ordered by divisibility.
FiniteLattice divisor_lattice(unsigned n);
/// 0 < 1 < ... < n-1.
FiniteLattice chain_lattice(unsigned n);
/// N5: 0 < a < b < 1, 0 < c < 1.
FiniteLattice pentagon_lattice();
/// M3: 0 < a, b, c < 1.
FiniteLattice diamond_lattice();

}  // namespace ulat
