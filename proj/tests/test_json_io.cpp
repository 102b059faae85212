#include "dgc/catalog.hpp"
#include "dgc/extract.hpp"
#include "dgc/json_io.hpp"
#include "doctest.h"

using namespace dgc;

TEST_CASE("presentation round trip") {
  for (const char* name : {"F", "G", "G'", "G''"}) {
    Presentation p = presentation_from_name(name);
    Presentation q = presentation_from_json(presentation_to_json(p));
    CHECK(p.mode == q.mode);
    CHECK(p.relators == q.relators);
  }
  CHECK_THROWS_AS(presentation_from_name("H"), std::invalid_argument);
}

TEST_CASE("coset table round trip") {
  Presentation g = Presentation::involution_b();
  for (const CosetTable& t : low_index_subgroups(g, 4, true)) {
    CosetTable back = coset_table_from_json(coset_table_to_json(t));
    CHECK(back == t);
  }
}

TEST_CASE("dessin round trip") {
  Dessin d = Dessin::from_pair(Perm::parse("(1,2,3)(4,5,6)", 6),
                               Perm::parse("(2,4)(3,5)", 6));
  json j = dessin_to_json(d);
  CHECK(j["g0"] == "(1,2,3)(4,5,6)");
  Dessin back = dessin_from_json(j);
  CHECK(back.g0() == d.g0());
  CHECK(back.g1() == d.g1());
  CHECK(back.labels() == d.labels());
}

TEST_CASE("geometry round trip keeps 1-based points") {
  IncidenceStructure s = build_geometry("GQ(2,1)");
  json j = geometry_to_json(s);
  CHECK(j["lines"][0][0] == 1);
  IncidenceStructure back = geometry_from_json(j);
  CHECK(back == s);
  CHECK(back.name == s.name);
}

TEST_CASE("report serialization") {
  Dessin d = Dessin::from_pair(Perm::parse("(1,2,3)(4,5,6)", 6),
                               Perm::parse("(2,4)(3,5)", 6));
  auto geos = extract_geometries(d);
  ContextualityReport r = score(geos[0].structure, d.labels(), d,
                                CommutationMode::Iterated);
  json j = report_to_json(r);
  CHECK(j["l"] == 8);
  CHECK(j["u"] == 4);
  CHECK(j["c"] == "1/2");
  CHECK(j["l_over_u"] == "2");
  CHECK(j["mode"] == "iterated");
  CHECK(j["defective_lines"].size() == 4);
}

TEST_CASE("dot exports are well formed") {
  Dessin d = Dessin::from_pair(Perm::parse("(1,2,3)(4,5,6)", 6),
                               Perm::parse("(2,4)(3,5)", 6));
  std::string dot = dessin_to_dot(d);
  CHECK(dot.find("graph dessin {") == 0);
  CHECK(dot.find("b0 -- w") != std::string::npos);
  IncidenceStructure s = build_geometry("K(3,3)");
  CHECK(incidence_to_dot(s).find("p1 -- l") != std::string::npos);
  CHECK(collinearity_to_dot(s).find("p1 -- p4") != std::string::npos);
}
