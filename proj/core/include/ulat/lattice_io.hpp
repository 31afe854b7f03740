#pragma once

#include "ulat/finite_lattice.hpp"

#include <string>
#include <string_view>

namespace ulat {

/// Parses {"elements": [names], "covers": [[lo, hi], ...]} with an optional
/// "name". Meet/join tables are derived from the covers; documents that do
/// not describe a lattice raise NotALatticeError naming the offending pair.
FiniteLattice load_finite_lattice(std::string_view json_text);

/// Inverse of load_finite_lattice (covers only; tables are re-derived on load).
std::string finite_lattice_to_json(const FiniteLattice& lattice);

}  // namespace ulat
