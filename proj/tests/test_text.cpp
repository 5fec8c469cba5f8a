#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace bkl;
using support::nf;
using support::simple;

TEST_CASE("parsing syllables") {
  // the worked 13-strand braid
  NormalForm a = nf(13, "d^3 [13,10][12,11][6,4]");
  CHECK(a.inf() == 3);
  REQUIRE(a.len() == 1);
  CHECK(a.factors()[0] == simple(13, {{13, 10}, {12, 11}, {6, 4}}));

  // sigma mapping: s(i) = a(i+1, i)
  CHECK(nf(6, "s(1)") == nf(6, "a(2,1)"));
  CHECK(nf(6, "s(5)") == nf(6, "a(6,5)"));
  CHECK(mul(nf(6, "d"), nf(6, "s(1)")) == NormalForm::epsilon_power(6, 1));

  // wraparound cycle indices
  NormalForm w = nf(10, "[12,11,10,9]");
  REQUIRE(w.len() == 1);
  CHECK(w.factors()[0] == simple(10, {{10, 9, 2, 1}}));

  // powers expand, d keeps its exponent
  CHECK(nf(5, "[2,1]^3") == power(nf(5, "[2,1]"), 3));
  CHECK(nf(5, "[2,1]^-2") == power(nf(5, "[2,1]"), -2));
  CHECK(nf(5, "a(3,1)^0").is_identity());
  CHECK(nf(5, "e").is_identity());
  CHECK(nf(5, "d^-4").inf() == -4);

  // a(i,j) index order does not matter
  CHECK(nf(7, "a(3,6)") == nf(7, "a(6,3)"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_braid(6, "q(1)"), error);
  CHECK_THROWS_AS(parse_braid(6, "[3,"), error);
  CHECK_THROWS_AS(parse_braid(6, "[3,1][4,2]"), error);  // crossing cycles in one syllable
  CHECK_THROWS_AS(parse_braid(6, "s(6)"), error);
  CHECK_THROWS_AS(parse_braid(6, "a(2,2)"), error);
  CHECK_THROWS_AS(parse_braid(6, "d^x"), error);
  CHECK_THROWS_AS(parse_braid(6, "[20,1]"), error);
  CHECK_THROWS_AS(parse_braid(6, "[2,1]^999999999"), error);

  // crossing cycles in separate syllables are a legal word
  CHECK(nf(6, "[3,1] [4,2]").len() >= 1);

  // juxtaposed cycles sharing strands multiply in order
  CHECK(nf(6, "[3,1][6,3]") == nf(6, "a(3,1) a(6,3)"));
  CHECK(nf(6, "d^3 [4,2][4,3][2,1]") == NormalForm::epsilon_power(6, 3));
  CHECK(nf(6, "[4,2][4,3][2,1]^-1") == inverse(nf(6, "[4,2][4,3][2,1]")));
}

TEST_CASE("printing golden values") {
  CHECK(to_string(nf(6, "d^3 [4,2] [4,3] [2,1]")) == "d^3 [4,3,2,1]");
  CHECK(to_string(NormalForm::identity(5)) == "e");
  CHECK(to_string(NormalForm::delta_power(5, 1)) == "d");
  CHECK(to_string(NormalForm::delta_power(5, -2)) == "d^-2");
  CHECK(to_string(mul(nf(6, "d^3 [4,3][5,2,1]"), nf(6, "d^3 [4,3][5,2,1]"))) ==
        "d^6 [6,1][5,4,3,2] . [5,2,1]");
  CHECK(to_string(simple(12, {{12, 10, 1}, {9, 8, 2}, {7, 6, 4, 3}})) ==
        "[12,10,1][9,8,2][7,6,4,3]");
  CHECK(to_string(SimpleElement::identity(3)) == "e");
}

TEST_CASE("parse then print round-trips on normal forms") {
  Rng rng(97);
  for (int i = 0; i < 500; ++i) {
    int n = 3 + static_cast<int>(rng() % 10);
    NormalForm x = NormalForm::of(random_word(rng, n, 1 + static_cast<int>(rng() % 8)));
    CHECK(nf(n, to_string(x)) == x);
  }
  // conjugator words round-trip as braids too
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng() % 10);
    BraidWord w = random_word(rng, n, 6);
    CHECK(NormalForm::of(parse_braid(n, to_string(w))) == NormalForm::of(w));
  }
}
