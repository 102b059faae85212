#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dgc/dessin.hpp"
#include "dgc/geometry.hpp"
#include "dgc/perm_group.hpp"

namespace dgc {

/// A geometry carried by one class of two-point stabilizers: lines are the
/// maximal cliques (size >= 2) of the graphs formed by the pairs sharing
/// one stabilizer subgroup, merged over all subgroups of the same order.
struct StabilizerGeometry {
  std::uint64_t stab_order = 1;
  std::string label;            // class label ("order=k")
  std::string name_hint;        // conventional group name when recognised
  IncidenceStructure structure;
  std::map<std::pair<int, int>, int> pair_key_ids;  // collinear pairs -> key id
};

/// All stabilizer geometries of a transitive dessin, ordered by stabilizer
/// order. Every unordered point pair is keyed by its two-point stabilizer;
/// pairs sharing a key form a graph whose maximal cliques become lines.
std::vector<StabilizerGeometry> extract_geometries(const Dessin& d);

}  // namespace dgc
