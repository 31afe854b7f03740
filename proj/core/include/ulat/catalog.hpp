#pragma once

// Registry of the standard carriers and their semimetric families.

#include "ulat/c00.hpp"
#include "ulat/evlin.hpp"
#include "ulat/fincof.hpp"
#include "ulat/finite_lattice.hpp"
#include "ulat/kernel.hpp"
#include "ulat/rat_vec.hpp"
#include "ulat/rational_line.hpp"
#include "ulat/semimetric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ulat {

struct CatalogEntry {
  std::string name;
  CarrierInfo info;
  std::vector<std::string> semimetrics;
  std::string description;
};

/// Every standard carrier: powerset1..powerset4, divisor60, chain2..chain5,
/// n5, m3, fincof, qline, qvec1..qvec5, c00, evlin.
std::vector<CatalogEntry> standard_carriers();
std::optional<CatalogEntry> lookup_carrier(std::string_view name);

struct NamedFamily {
  std::string name;
  FiniteFamily family;
};

struct FiniteCatalogEntry {
  FiniteLattice lattice;
  std::vector<NamedFamily> families;
};

/// The finite carriers with their semimetric families: discrete and zero on
/// all of them; on distributive ones also the valuation metric, the family of
/// all join-irreducible splits, and each single split.
std::vector<FiniteCatalogEntry> finite_catalog();
std::optional<FiniteLattice> finite_carrier(std::string_view name);

LatticeSemimetric<Rational> abs_semimetric();
LatticeSemimetric<RatVec> l1_semimetric(const RationalVectors& c);
LatticeSemimetric<C00Vector> l1_semimetric(const FinitelySupportedSequences& c);
LatticeSemimetric<EvLinSeq> l1_semimetric(const EventuallyLinearSequences& c);

}  // namespace ulat
