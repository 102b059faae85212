#pragma once

#include <string>
#include <vector>

#include "dgc/geometry.hpp"

namespace dgc {

/// Canonical constructions of the named geometries. Recognised names:
/// grid(3,3) | GQ(2,1), PG(2,2) | fano, PG(3,2), PG(4,2), GQ(2,2) | doily,
/// GQ(2,4), GH(1,2), GH(2,1), GO(1,2), GO(2,1), K(3,3), K(4,4), K(5,5),
/// K(3,3,3), petersen, desargues, pappus, hesse, pentagram, octahedron,
/// triangle. Throws std::invalid_argument for unknown names.
IncidenceStructure build_geometry(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace dgc
