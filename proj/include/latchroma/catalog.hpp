#pragma once

#include "latchroma/lattice.hpp"

namespace latchroma {

// Named lattices with the textbook coordinates: Zn, An, An*, Dn (n >= 4),
// Dn* (n >= 4), E6, E7, E8 (and duals), Leech. E7 and E6 are cut out of E8
// by x7 = x8 and x6 = x7 = x8; the duals are computed exactly. The Leech
// entry is built from the shipped generator data file and carries min/relevant
// norm metadata instead of supporting enumeration.
Lattice catalog(const std::string& name, int n = 0);

// Parses "catalog:NAME" or "catalog:NAME:n" into a lattice.
Lattice catalog_from_spec(const std::string& spec);

const std::vector<std::string>& catalog_names();

} // namespace latchroma
