// Frozen extraction cases found by the low-index searches.

#include "dgc/catalog.hpp"
#include "dgc/contextuality.hpp"
#include "dgc/extract.hpp"
#include "doctest.h"

using namespace dgc;

TEST_CASE("index-7 map with a single-generator Fano coordinatization") {
  Dessin d = Dessin::from_pair(Perm::parse("(1,2,4,6,7,5,3)", 7),
                               Perm::parse("(3,4)(6,7)", 7));
  CHECK(d.genus() == 0);
  auto geos = extract_geometries(d);
  const StabilizerGeometry* fano = nullptr;
  for (const auto& sg : geos)
    if (sg.structure.line_count() == 7) fano = &sg;
  REQUIRE(fano != nullptr);
  CHECK(isomorphic(fano->structure, build_geometry("PG(2,2)")).isomorphic);
  // one BFS variant uses powers of a only, and such labels never defect
  bool found_single_generator = false;
  for (const auto& labels : d.labels_variants()) {
    bool all_a = true;
    for (const Word& w : labels)
      for (Letter l : w.letters())
        if (l == kB || l == kBinv) all_a = false;
    if (!all_a) continue;
    found_single_generator = true;
    ContextualityReport r = score(fano->structure, labels, d, CommutationMode::Iterated);
    CHECK(r.l == 7);
    CHECK(r.u == 7);
    CHECK(r.c.num == 0);
  }
  CHECK(found_single_generator);
}

TEST_CASE("P2: the single-generator octahedron map is defect-free") {
  Dessin p2 = Dessin::from_pair(Perm::parse("(1,2,4,6,5,3)", 6),
                                Perm::parse("(2,3)(4,5)", 6));
  CHECK(PermGroup(6, {p2.g0(), p2.g1()}).order() == 12);
  std::vector<std::string> expected = {"", "a", "A", "a^2", "A^2", "a^3"};
  for (int k = 0; k < 6; ++k) CHECK(p2.labels()[k].str() == expected[k]);
  auto geos = extract_geometries(p2);
  REQUIRE(geos.size() == 2);
  CHECK(geos[0].stab_order == 1);
  CHECK(isomorphic(geos[0].structure, build_geometry("octahedron")).isomorphic);
  ContextualityReport r = score(geos[0].structure, p2.labels(), p2,
                                CommutationMode::Iterated);
  CHECK(r.u == 8);
  CHECK(r.c.num == 0);
  CHECK(geos[1].stab_order == 2);
  CHECK(geos[1].structure.line_count() == 3);  // the three diagonals
}

TEST_CASE("a K(4,4) dessin with commuting edges exists at index 8") {
  Dessin d = Dessin::from_pair(Perm::parse("(1,2,4,6,8,7,5,3)", 8),
                               Perm::parse("(6,7)", 8));
  const StabilizerGeometry* k44 = nullptr;
  auto geos = extract_geometries(d);
  for (const auto& sg : geos)
    if (sg.structure.line_count() == 16) k44 = &sg;
  REQUIRE(k44 != nullptr);
  CHECK(isomorphic(k44->structure, build_geometry("K(4,4)")).isomorphic);
  int best = 0;
  for (const auto& labels : d.labels_variants())
    best = std::max(best, score(k44->structure, labels, d, CommutationMode::Iterated).u);
  CHECK(best == 16);
}

TEST_CASE("a K(3,3) hypermap over the free group with commuting edges") {
  Dessin d = Dessin::from_pair(Perm::parse("(4,5)", 6),
                               Perm::parse("(1,2,4,6,5,3)", 6));
  const StabilizerGeometry* k33 = nullptr;
  auto geos = extract_geometries(d);
  for (const auto& sg : geos)
    if (sg.structure.line_count() == 9) k33 = &sg;
  REQUIRE(k33 != nullptr);
  CHECK(isomorphic(k33->structure, build_geometry("K(3,3)")).isomorphic);
  int best = 0;
  for (const auto& labels : d.labels_variants())
    best = std::max(best, score(k33->structure, labels, d, CommutationMode::Iterated).u);
  CHECK(best == 9);
}

TEST_CASE("every extracted line is keyed consistently") {
  // all pairs inside a line carry the very same stabilizer key
  for (auto [g0txt, g1txt, n] :
       {std::tuple{"(1,2,3)(4,5,6)", "(2,4)(3,5)", 6},
        std::tuple{"(1,2,4,6,7,5,3)", "(3,4)(6,7)", 7},
        std::tuple{"(2,3,4)(5,7,10,6,9,8)", "(1,2)(3,5)(4,6)(8,9)", 10}}) {
    Dessin d = Dessin::from_pair(Perm::parse(g0txt, n), Perm::parse(g1txt, n));
    for (const StabilizerGeometry& sg : extract_geometries(d))
      for (const auto& line : sg.structure.lines) {
        int key = -1;
        for (std::size_t i = 0; i < line.size(); ++i)
          for (std::size_t j = i + 1; j < line.size(); ++j) {
            auto it = sg.pair_key_ids.find({line[i], line[j]});
            REQUIRE(it != sg.pair_key_ids.end());
            if (key == -1) key = it->second;
            CHECK(it->second == key);
          }
      }
  }
}

TEST_CASE("index-10 dessin carrying Petersen and Desargues") {
  Dessin d = Dessin::from_pair(Perm::parse("(2,3,4)(5,7,10,6,9,8)", 10),
                               Perm::parse("(1,2)(3,5)(4,6)(8,9)", 10));
  CHECK(d.genus() == 0);
  PermGroup p(10, {d.g0(), d.g1()});
  CHECK(p.order() == 120);
  auto geos = extract_geometries(d);
  REQUIRE(geos.size() == 2);
  // order-2 stabilizers: duad triangles, forming the Desargues configuration
  CHECK(geos[0].stab_order == 2);
  CHECK(geos[0].structure.line_count() == 10);
  CHECK(isomorphic(geos[0].structure, build_geometry("desargues")).isomorphic);
  // order-4 stabilizers: one pair each, forming the Petersen graph
  CHECK(geos[1].stab_order == 4);
  CHECK(geos[1].structure.line_count() == 15);
  CHECK(isomorphic(geos[1].structure, build_geometry("petersen")).isomorphic);
}
