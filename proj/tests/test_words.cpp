#include <random>

#include "dgc/words.hpp"
#include "doctest.h"

using namespace dgc;

namespace {

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, kNumLetters - 1);
  std::vector<Letter> ls;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) ls.push_back(static_cast<Letter>(letter_dist(rng)));
  return Word::from_letters(ls);
}

}  // namespace

TEST_CASE("free cancellation") {
  CHECK(parse_word("aA") == Word());
  CHECK(parse_word("aA").empty());
  CHECK(parse_word("abBA") == Word());
  CHECK(parse_word("abb") == Word::from_letters({kA, kB, kB}));
}

TEST_CASE("mode G applies b^2 = e only there") {
  Presentation g = Presentation::involution_b();
  Presentation f = Presentation::free_group();
  CHECK(reduce(parse_word("abb"), g) == parse_word("a"));
  CHECK(reduce(parse_word("abb"), f) == parse_word("abb"));
  CHECK(reduce(parse_word("aB"), g) == parse_word("ab"));  // b^-1 -> b
  // every b-exponent +1 after reduction
  for (Letter l : reduce(parse_word("aBBBa"), g).letters()) CHECK(l != kBinv);
}

TEST_CASE("commutator basics") {
  Presentation f = Presentation::free_group();
  CHECK(commutator(parse_word("a"), parse_word("a^2"), f).empty());
  CHECK(commutator(parse_word("a"), parse_word("b"), f) == parse_word("ABab"));
  CHECK(commutator(Word(), parse_word("abab"), f).empty());
  std::vector<Word> one = {parse_word("a")};
  CHECK_THROWS_AS(commutator(one, f), std::invalid_argument);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("aBa") == Word::from_letters({kA, kBinv, kA}));
  CHECK(parse_word("a^-1 b") == Word::from_letters({kAinv, kB}));
  CHECK(parse_word("a^3") == Word::from_letters({kA, kA, kA}));
  CHECK(parse_word("(ab)^2") == Word::from_letters({kA, kB, kA, kB}));
  CHECK(parse_word("(a,b)") == parse_word("ABab"));
  CHECK(parse_word("(a,b)^2") == parse_word("ABabABab"));
  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("a^"), ParseError);
  try {
    parse_word("ab x");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("printer round-trips") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(rng, 50);
    CHECK(parse_word(w.str()) == w);
  }
}

TEST_CASE("reduce is idempotent and kills w w^-1") {
  std::mt19937 rng(999);
  Presentation g = Presentation::involution_b();
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(rng, 50);
    Word r = reduce(w, g);
    CHECK(reduce(r, g) == r);
    CHECK((w * w.inverse()).empty());
    CHECK(reduce(w * w.inverse(), g).empty());
  }
}

TEST_CASE("commutator inverse relation in F") {
  std::mt19937 rng(4242);
  Presentation f = Presentation::free_group();
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word(rng, 12), v = random_word(rng, 12);
    CHECK((commutator(u, v, f) * commutator(v, u, f)).empty());
  }
}
