#include <cmath>
#include <random>
#include <stdexcept>

#include "dgc/catalog.hpp"
#include "dgc/geometry.hpp"
#include "doctest.h"

using namespace dgc;

TEST_CASE("catalog sizes") {
  struct Row { const char* name; int points; int lines; };
  const Row rows[] = {
      {"GQ(2,1)", 9, 6},     {"PG(2,2)", 7, 7},      {"PG(3,2)", 15, 35},
      {"PG(4,2)", 31, 155},  {"GQ(2,2)", 15, 15},    {"GQ(2,4)", 27, 45},
      {"GH(1,2)", 14, 21},   {"GH(2,1)", 21, 14},    {"GO(1,2)", 30, 45},
      {"GO(2,1)", 45, 30},   {"K(3,3)", 6, 9},       {"K(4,4)", 8, 16},
      {"K(5,5)", 10, 25},    {"K(3,3,3)", 9, 27},    {"petersen", 10, 15},
      {"desargues", 10, 10}, {"pappus", 9, 9},       {"hesse", 9, 12},
      {"pentagram", 10, 5},  {"octahedron", 6, 8},   {"triangle", 3, 1},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    IncidenceStructure s = build_geometry(row.name);
    CHECK(s.points == row.points);
    CHECK(s.line_count() == row.lines);
  }
  CHECK_THROWS_AS(build_geometry("nonsense"), std::invalid_argument);
}

TEST_CASE("generalized polygon checks") {
  CHECK(polygon_check(build_geometry("GQ(2,1)"), 4, 2, 1).pass);
  CHECK(polygon_check(build_geometry("GQ(2,2)"), 4, 2, 2).pass);
  CHECK(polygon_check(build_geometry("GQ(2,4)"), 4, 2, 4).pass);
  CHECK(polygon_check(build_geometry("PG(2,2)"), 3, 2, 2).pass);
  CHECK(polygon_check(build_geometry("GH(1,2)"), 6, 1, 2).pass);
  CHECK(polygon_check(build_geometry("GH(2,1)"), 6, 2, 1).pass);
  CHECK(polygon_check(build_geometry("GO(1,2)"), 8, 1, 2).pass);
  CHECK(polygon_check(build_geometry("GO(2,1)"), 8, 2, 1).pass);
  // a projective plane is not a quadrangle
  CHECK_FALSE(polygon_check(build_geometry("PG(2,2)"), 4, 2, 2).pass);
  // disconnected input names its components
  IncidenceStructure two = IncidenceStructure::make(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(polygon_check(two, 4, 1, 0),
                       doctest::Contains("components"), std::invalid_argument);
}

TEST_CASE("isomorphism") {
  IncidenceStructure grid = build_geometry("GQ(2,1)");
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> relabel(grid.points);
    for (int i = 0; i < grid.points; ++i) relabel[i] = i;
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<std::vector<int>> lines;
    for (const auto& line : grid.lines) {
      std::vector<int> image;
      for (int p : line) image.push_back(relabel[p]);
      lines.push_back(image);
    }
    IncidenceStructure shuffled = IncidenceStructure::make(grid.points, lines);
    IsoResult iso = isomorphic(grid, shuffled);
    REQUIRE(iso.isomorphic);
    // bijection maps lines to lines
    for (const auto& line : grid.lines) {
      std::vector<int> image;
      for (int p : line) image.push_back(iso.bijection[p]);
      std::sort(image.begin(), image.end());
      CHECK(std::find(shuffled.lines.begin(), shuffled.lines.end(), image) !=
            shuffled.lines.end());
    }
  }
  CHECK_FALSE(isomorphic(build_geometry("K(3,3)"), grid).isomorphic);
  CHECK_FALSE(isomorphic(build_geometry("pappus"), build_geometry("hesse")).isomorphic);
  CHECK(isomorphic(build_geometry("GH(2,1)"),
                   dual_of(build_geometry("GH(1,2)"))).isomorphic);
}

TEST_CASE("collinearity distance") {
  IncidenceStructure grid = build_geometry("GQ(2,1)");
  CHECK(collinearity_distance(grid, 0, 0) == 0);
  CHECK(collinearity_distance(grid, 0, 1) == 1);
  CHECK(collinearity_distance(grid, 0, 4) == 2);  // different row and column
  IncidenceStructure two = IncidenceStructure::make(4, {{0, 1}, {2, 3}});
  CHECK(collinearity_distance(two, 0, 2) == -1);
}

TEST_CASE("hyperplane predicate") {
  IncidenceStructure grid = build_geometry("GQ(2,1)");
  // a full row plus a full column through one point
  PointSet perp = 0;
  for (int p : {0, 1, 2, 3, 6}) perp |= PointSet{1} << p;
  CHECK(is_hyperplane(grid, perp));
  // an ovoid: one point per row and column
  PointSet ovoid = (PointSet{1} << 0) | (PointSet{1} << 4) | (PointSet{1} << 8);
  CHECK(is_hyperplane(grid, ovoid));
  CHECK_FALSE(is_hyperplane(grid, (PointSet{1} << 9) - 1));  // everything
  CHECK_FALSE(is_hyperplane(grid, 0));
}

TEST_CASE("brute hyperplanes of the grid and doily") {
  auto grid_h = hyperplanes_brute(build_geometry("GQ(2,1)"));
  CHECK(grid_h.size() == 15);
  auto doily_h = hyperplanes_brute(build_geometry("GQ(2,2)"));
  CHECK(doily_h.size() == 31);
}

TEST_CASE("veldkamp closure matches brute force") {
  for (const char* name : {"GQ(2,1)", "GQ(2,2)"}) {
    CAPTURE(name);
    IncidenceStructure s = build_geometry(name);
    auto brute = hyperplanes_brute(s);
    auto veldkamp = hyperplanes_veldkamp(s);
    CHECK(brute == veldkamp);  // both sorted
  }
  CHECK_THROWS_AS(hyperplanes_veldkamp(build_geometry("petersen")),
                  std::invalid_argument);
}

TEST_CASE("veldkamp sum involution on the doily") {
  IncidenceStructure doily = build_geometry("GQ(2,2)");
  auto hs = hyperplanes_veldkamp(doily);
  int checked = 0;
  for (std::size_t i = 0; i < hs.size() && checked < 200; ++i)
    for (std::size_t j = 0; j < i && checked < 200; ++j) {
      PointSet sum = hyperplane_sum(hs[i], hs[j], doily.points);
      CHECK(hyperplane_sum(hs[i], hs[j], doily.points) ==
            hyperplane_sum(hs[j], hs[i], doily.points));
      if (is_hyperplane(doily, sum)) {
        CHECK(hyperplane_sum(sum, hs[j], doily.points) == hs[i]);
        ++checked;
      }
    }
  CHECK(checked == 200);
}

TEST_CASE("GQ(2,4) hyperplanes by closure only") {
  IncidenceStructure s = build_geometry("GQ(2,4)");
  auto hs = hyperplanes_veldkamp(s);
  CHECK(hs.size() == 63);
  double log2h = std::log2(static_cast<double>(hs.size()));
  CHECK(std::lround(log2h) == 6);
  for (PointSet h : hs) CHECK(is_hyperplane(s, h));
}

TEST_CASE("ovoid seeds") {
  CHECK(ovoids(build_geometry("GQ(2,1)")).size() == 6);
  CHECK(ovoids(build_geometry("GQ(2,2)")).size() == 6);
  CHECK(ovoids(build_geometry("GQ(2,4)")).empty());
  for (PointSet o : ovoids(build_geometry("GQ(2,2)")))
    CHECK(is_hyperplane(build_geometry("GQ(2,2)"), o));
}
