#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dgc {

/// Point-line incidence structure on points 0..n-1. Lines are sorted point
/// vectors, at least two points each, no duplicates.
struct IncidenceStructure {
  int points = 0;
  std::vector<std::vector<int>> lines;
  std::string name;

  static IncidenceStructure make(int points, std::vector<std::vector<int>> lines,
                                 std::string name = "");

  int line_count() const { return static_cast<int>(lines.size()); }
  std::vector<std::vector<int>> lines_through(int p) const;

  /// Adjacency of the collinearity graph.
  std::vector<std::vector<char>> collinearity() const;
  bool connected() const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&);
};

struct PolygonCheckResult {
  bool pass = false;
  std::string violation;  // empty when pass
  int diameter = -1;
  int girth = -1;
};

/// Generalized-polygon test: (s+1)-point lines, (t+1) lines per point,
/// incidence graph of diameter `gon` and girth 2*gon. Throws on a
/// disconnected structure, naming the components.
PolygonCheckResult polygon_check(const IncidenceStructure& s, int gon, int line_size_s,
                                 int point_degree_t);

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> bijection;  // s1 point -> s2 point
};

/// Backtracking isomorphism test over degree/line-size refined classes.
IsoResult isomorphic(const IncidenceStructure& s1, const IncidenceStructure& s2);

/// Geometric hyperplanes as bitsets over the points (n <= 64).
using PointSet = std::uint64_t;

bool is_hyperplane(const IncidenceStructure& s, PointSet h);

/// All hyperplanes by testing every subset; requires points <= 25.
std::vector<PointSet> hyperplanes_brute(const IncidenceStructure& s);

/// Closure of the singular hyperplanes (balls of collinearity radius
/// gon/2 - 1) and the ovoids under H1 (+) H2 = complement of the symmetric
/// difference, dropping candidates that fail the hyperplane predicate.
/// Requires the structure to pass polygon_check for some gon in {4, 6, 8}.
/// Ovoid seeds are needed because the perp-sets of GQ(2,2) are already
/// closed under the sum and span only a hyperplane of its Veldkamp space.
std::vector<PointSet> hyperplanes_veldkamp(const IncidenceStructure& s);

/// All ovoids: point sets meeting every line in exactly one point.
std::vector<PointSet> ovoids(const IncidenceStructure& s);

/// Veldkamp sum.
inline PointSet hyperplane_sum(PointSet a, PointSet b, int points) {
  PointSet mask = points == 64 ? ~PointSet{0} : ((PointSet{1} << points) - 1);
  return (~(a ^ b)) & mask;
}

/// BFS distance in the collinearity graph; -1 when unreachable.
int collinearity_distance(const IncidenceStructure& s, int p, int q);

/// Double of a geometry: its points plus its lines, joined by flags.
IncidenceStructure double_of(const IncidenceStructure& s, std::string name = "");
/// Dual: old lines become points, old points become lines.
IncidenceStructure dual_of(const IncidenceStructure& s, std::string name = "");

}  // namespace dgc
