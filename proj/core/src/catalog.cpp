#include "ulat/catalog.hpp"


namespace ulat {

LatticeSemimetric<Rational> abs_semimetric() {
  return make_semimetric<Rational>("abs", [](const Rational& x, const Rational& y) {
    return ExtValue(abs_value(Rational(x - y)));
  });
}

LatticeSemimetric<RatVec> l1_semimetric(const RationalVectors& c) {
  return norm_semimetric(c, "l1", [](const RatVec& v) { return l1_norm(v); });
}

LatticeSemimetric<C00Vector> l1_semimetric(const FinitelySupportedSequences& c) {
  return norm_semimetric(c, "l1", [](const C00Vector& v) {
    Rational total = 0;
    for (const auto& [i, q] : v.entries()) total += q;
    return total;
  });
}

LatticeSemimetric<EvLinSeq> l1_semimetric(const EventuallyLinearSequences& c) {
  return make_semimetric<EvLinSeq>("l1", [c](const EvLinSeq& x, const EvLinSeq& y) {
    const EvLinSeq d = c.add(x, c.negate(y));
    return l1_norm(c.join(d, c.negate(d)));
  });
}

namespace {

std::vector<FiniteLattice> finite_lattices() {
  std::vector<FiniteLattice> out;
  for (unsigned n = 1; n <= 4; ++n) out.push_back(powerset_lattice(n));
  out.push_back(divisor_lattice(60));
  for (unsigned n = 2; n <= 5; ++n) out.push_back(chain_lattice(n));
  out.push_back(pentagon_lattice());
  out.push_back(diamond_lattice());
  return out;
}

std::vector<std::string> family_names(const FiniteCatalogEntry& e) {
  std::vector<std::string> names;
  for (const auto& f : e.families) names.push_back(f.name);
  return names;
}

}  // namespace

std::vector<FiniteCatalogEntry> finite_catalog() {
  std::vector<FiniteCatalogEntry> out;
  for (auto& L : finite_lattices()) {
    FiniteCatalogEntry e{L, {}};
    e.families.push_back({"discrete", FiniteFamily(L.name(), {discrete_semimetric<FiniteElement>()})});
    e.families.push_back({"zero", FiniteFamily(L.name(), {zero_semimetric<FiniteElement>()})});
    if (L.info().distributive) {
      e.families.push_back({"valuation", FiniteFamily(L.name(), {valuation_semimetric(L)})});
      std::vector<LatticeSemimetric<FiniteElement>> splits;
      for (auto c : join_irreducibles(L)) {
        auto d = indicator_semimetric(L, c);
        e.families.push_back({d.name, FiniteFamily(L.name(), {d})});
        splits.push_back(std::move(d));
      }
      e.families.push_back({"splits", FiniteFamily(L.name(), std::move(splits))});
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<FiniteLattice> finite_carrier(std::string_view name) {
  for (auto& L : finite_lattices())
    if (L.name() == name) return L;
  return std::nullopt;
}

std::vector<CatalogEntry> standard_carriers() {
  std::vector<CatalogEntry> out;
  for (const auto& e : finite_catalog())
    out.push_back({e.lattice.name(), e.lattice.info(), family_names(e),
                   std::to_string(e.lattice.size()) + "-element finite lattice"});
  out.push_back({"fincof", FinCofAlgebra().info(), {"discrete"},
                 "finite and cofinite subsets of an uncountable set with symbolic atoms"});
  out.push_back({"qline", RationalLine().info(), {"abs"}, "rational line"});
  for (std::size_t n = 1; n <= 5; ++n)
    out.push_back({"qvec" + std::to_string(n), RationalVectors(n).info(), {"l1"},
                   "rational vectors with the coordinatewise order"});
  out.push_back({"c00", FinitelySupportedSequences().info(), {"l1"}, "finitely supported rational sequences"});
  out.push_back({"evlin", EventuallyLinearSequences().info(), {"l1"},
                 "eventually affine rational sequences with the extended l1 norm"});
  return out;
}

std::optional<CatalogEntry> lookup_carrier(std::string_view name) {
  for (auto& e : standard_carriers())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace ulat
