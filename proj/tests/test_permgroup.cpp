#include <random>
#include <set>

#include "dgc/perm_group.hpp"
#include "doctest.h"

using namespace dgc;

namespace {

// Independent order oracle: plain closure under multiplication.
std::set<Perm> naive_elements(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> elems = {Perm(degree)};
  std::vector<Perm> queue = {Perm(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : gens) {
      Perm next = queue[i] * g;
      if (elems.insert(next).second) queue.push_back(next);
    }
  return elems;
}

const Perm kP1g0 = Perm::parse("(1,2,3)(4,5,6)", 6);
const Perm kP1g1 = Perm::parse("(2,4)(3,5)", 6);

}  // namespace

TEST_CASE("perm basics") {
  Perm g = Perm::parse("(1,2,3)(4,5,6)", 6);
  CHECK(g.str() == "(1,2,3)(4,5,6)");
  CHECK(g.num_cycles() == 2);
  CHECK(g.cycle_type() == std::vector<int>{3, 3});
  CHECK((g * g.inverse()).is_identity());
  CHECK(g.pow(3).is_identity());
  CHECK(Perm(4).str() == "()");
  CHECK(Perm::parse("()", 3) == Perm(3));
  // left-to-right composition: (1,2) then (2,3) maps 1 -> 3... 1->2->3
  Perm s = Perm::parse("(1,2)", 3) * Perm::parse("(2,3)", 3);
  CHECK(s(0) == 2);
}

TEST_CASE("evaluate is the right action homomorphism") {
  CHECK(evaluate(Word(), kP1g0, kP1g1).is_identity());
  // the transversal {e,a,A,ab,Ab,abA} labels cosets 1..6
  CHECK(evaluate(parse_word("ab"), kP1g0, kP1g1)(0) == 3);
  CHECK(evaluate(parse_word("abA"), kP1g0, kP1g1)(0) == 5);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Letter> u, v;
    for (int i = len(rng); i > 0; --i) u.push_back(static_cast<Letter>(letter(rng)));
    for (int i = len(rng); i > 0; --i) v.push_back(static_cast<Letter>(letter(rng)));
    Word wu = Word::from_letters(u), wv = Word::from_letters(v);
    CHECK(evaluate(wu * wv, kP1g0, kP1g1) ==
          evaluate(wu, kP1g0, kP1g1) * evaluate(wv, kP1g0, kP1g1));
  }
}

TEST_CASE("group order") {
  CHECK(PermGroup(5, {}).order() == 1);
  PermGroup s3(3, {Perm::parse("(1,2)", 3), Perm::parse("(1,2,3)", 3)});
  CHECK(s3.order() == 6);
  PermGroup s7(7, {Perm::parse("(1,2)", 7), Perm::parse("(1,2,3,4,5,6,7)", 7)});
  CHECK(s7.order() == 5040);
  PermGroup p1(6, {kP1g0, kP1g1});
  CHECK(p1.order() == 12);
  CHECK(p1.is_transitive());
}

TEST_CASE("order matches naive enumeration on random groups") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    int degree = 4 + static_cast<int>(rng() % 4);  // 4..7
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> images(degree);
      for (int i = 0; i < degree; ++i) images[i] = i;
      std::shuffle(images.begin(), images.end(), rng);
      gens.push_back(Perm::from_images(images));
    }
    PermGroup g(degree, gens);
    auto naive = naive_elements(degree, gens);
    CHECK(g.order() == naive.size());
    if (g.order() <= 5040) {
      auto listed = g.elements();
      CHECK(listed.size() == naive.size());
      CHECK(std::set<Perm>(listed.begin(), listed.end()) == naive);
    }
  }
}

TEST_CASE("point stabilizer") {
  PermGroup s3(3, {Perm::parse("(1,2)", 3), Perm::parse("(1,2,3)", 3)});
  PermGroup stab = s3.point_stabilizer(0);
  CHECK(stab.order() == 2);
  for (const Perm& g : stab.generators()) CHECK(g(0) == 0);

  // orbit-stabilizer on transitive groups
  PermGroup p1(6, {kP1g0, kP1g1});
  for (int p = 0; p < 6; ++p)
    CHECK(p1.orbit(p).size() * p1.point_stabilizer(p).order() == p1.order());
}

TEST_CASE("two point stabilizer") {
  PermGroup p1(6, {kP1g0, kP1g1});
  CHECK_THROWS_AS(p1.two_point_stabilizer(2, 2), std::invalid_argument);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      if (p == q) continue;
      PermGroup spq = p1.two_point_stabilizer(p, q);
      PermGroup sqp = p1.two_point_stabilizer(q, p);
      CHECK(subgroup_key(spq) == subgroup_key(sqp));
      for (const Perm& g : spq.generators()) {
        CHECK(g(p) == p);
        CHECK(g(q) == q);
      }
    }
  // opposite vertices keep an involution, adjacent ones only the identity
  CHECK(p1.two_point_stabilizer(0, 5).order() == 2);
  CHECK(p1.two_point_stabilizer(0, 1).order() == 1);
}

TEST_CASE("whole group when both points fixed by all generators") {
  // intransitive: generators move only {1,2,3}, fix 4 and 5
  PermGroup g(5, {Perm::parse("(1,2,3)", 5), Perm::parse("(1,2)", 5)});
  CHECK(g.two_point_stabilizer(3, 4).order() == g.order());
}

TEST_CASE("subgroup keys separate subgroups, class labels group by order") {
  PermGroup s4(4, {Perm::parse("(1,2)", 4), Perm::parse("(1,2,3,4)", 4)});
  PermGroup h1(4, {Perm::parse("(1,2)", 4)});
  PermGroup h2(4, {Perm::parse("(3,4)", 4)});
  SubgroupKey k1 = subgroup_key(h1), k2 = subgroup_key(h2);
  CHECK(k1 != k2);
  CHECK(k1.order == k2.order);
  CHECK(class_label(k1.order) == class_label(k2.order));
  CHECK(subgroup_key(h1) == subgroup_key(PermGroup(4, {Perm::parse("(1,2)", 4)})));
  CHECK(group_name_hint(h1) == "Z2");
  CHECK(group_name_hint(PermGroup(4, {})) == "Z1");
  PermGroup a4(4, {Perm::parse("(1,2,3)", 4), Perm::parse("(2,3,4)", 4)});
  CHECK(a4.order() == 12);
  CHECK(group_name_hint(a4) == "A4");
}

TEST_CASE("contains via sifting") {
  PermGroup a4(4, {Perm::parse("(1,2,3)", 4), Perm::parse("(2,3,4)", 4)});
  CHECK(a4.contains(Perm::parse("(1,2)(3,4)", 4)));
  CHECK_FALSE(a4.contains(Perm::parse("(1,2)", 4)));
}
