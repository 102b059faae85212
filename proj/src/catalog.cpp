#include "dgc/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dgc {

namespace {

IncidenceStructure grid33() {
  std::vector<std::vector<int>> lines;
  for (int r = 0; r < 3; ++r) lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  for (int c = 0; c < 3; ++c) lines.push_back({c, c + 3, c + 6});
  return IncidenceStructure::make(9, std::move(lines), "GQ(2,1)");
}

// Points are the nonzero vectors of GF(2)^{n+1}; lines are the triples
// summing to zero.
IncidenceStructure pg2(int n, std::string name) {
  int count = (1 << (n + 1)) - 1;
  std::vector<std::vector<int>> lines;
  for (int u = 1; u <= count; ++u)
    for (int v = u + 1; v <= count; ++v) {
      int w = u ^ v;
      if (w > v) lines.push_back({u - 1, v - 1, w - 1});
    }
  return IncidenceStructure::make(count, std::move(lines), std::move(name));
}

// Duads and synthemes of a six-element set.
IncidenceStructure doily() {
  std::vector<std::pair<int, int>> duads;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      index[{i, j}] = static_cast<int>(duads.size());
      duads.push_back({i, j});
    }
  std::vector<std::vector<int>> lines;
  // all partitions of {0..5} into three duads
  for (int j = 1; j < 6; ++j) {
    std::vector<int> rest;
    for (int k = 1; k < 6; ++k)
      if (k != j) rest.push_back(k);
    // first duad {0, j}; split rest = {r0,r1,r2,r3} into two duads
    for (int m = 1; m < 4; ++m) {
      std::vector<int> other;
      for (int k = 1; k < 4; ++k)
        if (k != m) other.push_back(rest[k]);
      lines.push_back({index[{0, j}],
                       index[{std::min(rest[0], rest[m]), std::max(rest[0], rest[m])}],
                       index[{std::min(other[0], other[1]), std::max(other[0], other[1])}]});
    }
  }
  return IncidenceStructure::make(15, std::move(lines), "GQ(2,2)");
}

// Elliptic quadric Q^-(5,2): x0 x1 + x2 x3 + x4^2 + x4 x5 + x5^2.
IncidenceStructure gq24() {
  auto quad = [](int v) {
    int x0 = v & 1, x1 = (v >> 1) & 1, x2 = (v >> 2) & 1, x3 = (v >> 3) & 1,
        x4 = (v >> 4) & 1, x5 = (v >> 5) & 1;
    return (x0 * x1 + x2 * x3 + x4 + x4 * x5 + x5) & 1;
  };
  std::vector<int> singular;
  std::vector<int> point_of(64, -1);
  for (int v = 1; v < 64; ++v)
    if (quad(v) == 0) {
      point_of[v] = static_cast<int>(singular.size());
      singular.push_back(v);
    }
  std::vector<std::vector<int>> lines;
  for (std::size_t i = 0; i < singular.size(); ++i)
    for (std::size_t j = i + 1; j < singular.size(); ++j) {
      int w = singular[i] ^ singular[j];
      if (point_of[w] != -1 && w > singular[j])
        lines.push_back({static_cast<int>(i), static_cast<int>(j), point_of[w]});
    }
  return IncidenceStructure::make(static_cast<int>(singular.size()), std::move(lines),
                                  "GQ(2,4)");
}

IncidenceStructure complete_multipartite(const std::vector<int>& parts, std::string name) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t pi = 0; pi < parts.size(); ++pi)
    for (int k = 0; k < parts[pi]; ++k) {
      part_of.push_back(static_cast<int>(pi));
      ++n;
    }
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) lines.push_back({i, j});
  return IncidenceStructure::make(n, std::move(lines), std::move(name));
}

// Vertices are duads of {0..4}; edges join disjoint duads.
IncidenceStructure petersen() {
  std::vector<std::pair<int, int>> duads;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) duads.push_back({i, j});
  std::vector<std::vector<int>> lines;
  for (std::size_t i = 0; i < duads.size(); ++i)
    for (std::size_t j = i + 1; j < duads.size(); ++j) {
      auto [a, b] = duads[i];
      auto [c, d] = duads[j];
      if (a != c && a != d && b != c && b != d)
        lines.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return IncidenceStructure::make(10, std::move(lines), "petersen");
}

// Points are duads of {0..4}, lines are triads; a duad lies on the triads
// containing it (Levi graph is the bipartite Kneser graph H(5,2)).
IncidenceStructure desargues() {
  std::map<std::pair<int, int>, int> duad_index;
  int next = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) duad_index[{i, j}] = next++;
  std::vector<std::vector<int>> lines;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c)
        lines.push_back({duad_index[{a, b}], duad_index[{a, c}], duad_index[{b, c}]});
  return IncidenceStructure::make(10, std::move(lines), "desargues");
}

// AG(2,3): points Z3 x Z3, all twelve affine lines.
IncidenceStructure hesse() {
  std::vector<std::vector<int>> lines;
  for (int dx = 0; dx < 3; ++dx)
    for (int dy = 0; dy < 3; ++dy) {
      if (dx == 0 && dy == 0) continue;
      if (dx == 0 && dy != 1) continue;  // normalise direction
      if (dx != 0 && dx != 1) continue;
      for (int sx = 0; sx < 3; ++sx)
        for (int sy = 0; sy < 3; ++sy) {
          std::vector<int> line;
          for (int t = 0; t < 3; ++t)
            line.push_back(((sx + t * dx) % 3) * 3 + ((sy + t * dy) % 3));
          std::sort(line.begin(), line.end());
          if (std::find(lines.begin(), lines.end(), line) == lines.end())
            lines.push_back(line);
        }
    }
  return IncidenceStructure::make(9, std::move(lines), "hesse");
}

// Hesse minus the horizontal parallel class.
IncidenceStructure pappus() {
  IncidenceStructure h = hesse();
  std::vector<std::vector<int>> lines;
  for (const auto& line : h.lines) {
    // drop lines of constant x-coordinate (the class {0,1,2},{3,4,5},{6,7,8})
    if (line[0] / 3 == line[1] / 3 && line[1] / 3 == line[2] / 3) continue;
    lines.push_back(line);
  }
  return IncidenceStructure::make(9, std::move(lines), "pappus");
}

// Five lines of four points meeting pairwise in one point: points are the
// unordered line pairs.
IncidenceStructure pentagram() {
  std::map<std::pair<int, int>, int> index;
  int next = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) index[{i, j}] = next++;
  std::vector<std::vector<int>> lines(5);
  for (auto [pair, idx] : index) {
    lines[pair.first].push_back(idx);
    lines[pair.second].push_back(idx);
  }
  return IncidenceStructure::make(10, std::move(lines), "pentagram");
}

// Octahedron with its eight triangles as lines; opposite pairs are
// (1,4), (2,5), (3,6) in 1-based labels.
IncidenceStructure octahedron() {
  std::vector<std::vector<int>> lines;
  for (int i : {0, 3})
    for (int j : {1, 4})
      for (int k : {2, 5}) lines.push_back({i, j, k});
  return IncidenceStructure::make(6, std::move(lines), "octahedron");
}

}  // namespace

IncidenceStructure build_geometry(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(), ::tolower);
  key.erase(std::remove_if(key.begin(), key.end(),
                           [](char c) { return c == ' ' || c == '_' || c == '-'; }),
            key.end());
  if (key == "grid(3,3)" || key == "gq(2,1)" || key == "grid33") return grid33();
  if (key == "pg(2,2)" || key == "fano") return pg2(2, "PG(2,2)");
  if (key == "pg(3,2)") return pg2(3, "PG(3,2)");
  if (key == "pg(4,2)") return pg2(4, "PG(4,2)");
  if (key == "gq(2,2)" || key == "doily") return doily();
  if (key == "gq(2,4)") return gq24();
  if (key == "gh(1,2)") return double_of(pg2(2, ""), "GH(1,2)");
  if (key == "gh(2,1)") return dual_of(double_of(pg2(2, ""), ""), "GH(2,1)");
  if (key == "go(1,2)") return double_of(doily(), "GO(1,2)");
  if (key == "go(2,1)") return dual_of(double_of(doily(), ""), "GO(2,1)");
  if (key == "k(3,3)") return complete_multipartite({3, 3}, "K(3,3)");
  if (key == "k(4,4)") return complete_multipartite({4, 4}, "K(4,4)");
  if (key == "k(5,5)") return complete_multipartite({5, 5}, "K(5,5)");
  if (key == "k(3,3,3)") return complete_multipartite({3, 3, 3}, "K(3,3,3)");
  if (key == "petersen") return petersen();
  if (key == "desargues") return desargues();
  if (key == "pappus") return pappus();
  if (key == "hesse") return hesse();
  if (key == "pentagram") return pentagram();
  if (key == "octahedron") return octahedron();
  if (key == "triangle") return IncidenceStructure::make(3, {{0, 1, 2}}, "triangle");
  throw std::invalid_argument("unknown geometry name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"GQ(2,1)", "PG(2,2)", "PG(3,2)", "PG(4,2)", "GQ(2,2)", "GQ(2,4)",
          "GH(1,2)", "GH(2,1)", "GO(1,2)", "GO(2,1)", "K(3,3)",  "K(4,4)",
          "K(5,5)",  "K(3,3,3)", "petersen", "desargues", "pappus", "hesse",
          "pentagram", "octahedron", "triangle"};
}

}  // namespace dgc
