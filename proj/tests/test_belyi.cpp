#include <random>

#include "dgc/belyi.hpp"
#include "doctest.h"

using namespace dgc;

TEST_CASE("bigint arithmetic against 64-bit ground truth") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int trial = 0; trial < 2000; ++trial) {
    long long a = dist(rng), b = dist(rng);
    CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
    if (b != 0) {
      CHECK((BigInt(a) / BigInt(b)).to_ll() == a / b);
      CHECK((BigInt(a) % BigInt(b)).to_ll() == a % b);
    }
    CHECK(BigInt(a).str() == std::to_string(a));
    CHECK(BigInt::from_string(std::to_string(a)) == BigInt(a));
  }
  // big values round-trip through strings and divmod identity holds
  BigInt big = BigInt::from_string("123456789012345678901234567890123456789");
  CHECK(big.str() == "123456789012345678901234567890123456789");
  BigInt d = BigInt::from_string("98765432109876543210");
  CHECK(((big / d) * d + big % d) == big);
  CHECK(BigInt::gcd(BigInt(24), BigInt(-36)) == BigInt(12));
}

TEST_CASE("polynomial gcd and square-free decomposition") {
  // p = (x-1)^3 (x+3)^2
  Poly xm1({Rat(-1), Rat(1)});
  Poly xp3({Rat(3), Rat(1)});
  Poly p = xm1 * xm1 * xm1 * xp3 * xp3;
  auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].first == xp3.monic());
  CHECK(sf[0].second == 2);
  CHECK(sf[1].first == xm1.monic());
  CHECK(sf[1].second == 3);
  CHECK(root_multiplicities(p) == std::vector<int>{3, 2});
  CHECK(poly_gcd(p, p.derivative()) == (xm1 * xm1 * xp3).monic());
  // x^3: single factor of multiplicity 3
  Poly x3 = Poly::x() * Poly::x() * Poly::x();
  CHECK(root_multiplicities(x3) == std::vector<int>{3});
}

TEST_CASE("f2 passport and dessin match") {
  RationalMap f2 = RationalMap::parse("(4/27) * x^6 / (x^2-1)^2");
  CHECK(f2.degree() == 6);
  BelyiPassport pp = passport_of(f2);
  CHECK(pp.over0 == std::vector<int>{6});
  CHECK(pp.over1 == std::vector<int>{2, 2, 1, 1});
  CHECK(pp.overinf == std::vector<int>{2, 2, 2});
  CHECK(pp.sums_match_degree);
  CHECK(pp.critical_values_confined);
  CHECK(pp.all_pass());

  Dessin p2 = Dessin::from_pair(Perm::parse("(1,2,4,6,5,3)", 6),
                                Perm::parse("(2,3)(4,5)", 6));
  CHECK(matches_dessin(f2, p2));
  Dessin p1 = Dessin::from_pair(Perm::parse("(1,2,3)(4,5,6)", 6),
                                Perm::parse("(2,4)(3,5)", 6));
  CHECK_FALSE(matches_dessin(f2, p1));
}

TEST_CASE("trivial maps") {
  RationalMap id = RationalMap::parse("x");
  BelyiPassport pp = passport_of(id);
  CHECK(pp.over0 == std::vector<int>{1});
  CHECK(pp.over1 == std::vector<int>{1});
  CHECK(pp.overinf == std::vector<int>{1});
  CHECK(pp.all_pass());
  CHECK(matches_dessin(id, Dessin::from_pair(Perm(1), Perm(1))));

  RationalMap sq = RationalMap::parse("x^2");
  BelyiPassport pps = passport_of(sq);
  CHECK(pps.over0 == std::vector<int>{2});
  CHECK(pps.over1 == std::vector<int>{1, 1});
  CHECK(pps.overinf == std::vector<int>{2});
  CHECK(pps.all_pass());

  CHECK_THROWS_AS(passport_of(RationalMap::parse("3/4")), std::invalid_argument);
}

TEST_CASE("f1 as printed is inconsistent with the degree-6 dessin") {
  RationalMap f1 = RationalMap::parse("-(1/64) * (x-1)^3 * (x+3)^2 / x^3");
  CHECK(f1.degree() == 5);
  BelyiPassport pp = passport_of(f1);
  CHECK(pp.over0 == std::vector<int>{3, 2});
  // a degree-5 map cannot carry the passport of a 6-edge dessin
  Dessin p1 = Dessin::from_pair(Perm::parse("(1,2,3)(4,5,6)", 6),
                                Perm::parse("(2,4)(3,5)", 6));
  CHECK_FALSE(matches_dessin(f1, p1));
}

TEST_CASE("passport invariant under x -> x + c") {
  RationalMap f2 = RationalMap::parse("(4/27) * x^6 / (x^2-1)^2");
  BelyiPassport base = passport_of(f2);
  for (long long c : {1LL, -2LL, 5LL, 7LL}) {
    BelyiPassport moved = passport_of(f2.shifted(Rat(c)));
    CHECK(moved.over0 == base.over0);
    CHECK(moved.over1 == base.over1);
    CHECK(moved.overinf == base.overinf);
    CHECK(moved.all_pass() == base.all_pass());
  }
}

TEST_CASE("maps with stray critical values are flagged") {
  // f = x^3 - 3x has critical values +-2, far from {0,1,inf}
  BelyiPassport pp = passport_of(RationalMap::parse("x^3 - 3*x"));
  CHECK_FALSE(pp.critical_values_confined);
  CHECK(pp.sums_match_degree);
}
