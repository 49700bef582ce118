#include <doctest.h>

#include "cobordia/errors.hpp"
#include "cobordia/laws.hpp"
#include "cobordia/word.hpp"

using namespace cobordia;

TEST_CASE("parse accepts words over the sign alphabet") {
  const ObjWord w = ObjWord::parse("+-+");
  REQUIRE(w.length() == 3);
  CHECK(w[0] == Orientation::Plus);
  CHECK(w[1] == Orientation::Minus);
  CHECK(w[2] == Orientation::Plus);
  CHECK(w.str() == "+-+");

  CHECK(ObjWord::parse("").empty());
  CHECK(ObjWord::parse("") == ObjWord());
}

TEST_CASE("parse rejects other characters and names the position") {
  try {
    ObjWord::parse("+x-");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
}

TEST_CASE("flip is an involution") {
  CHECK(flip(Orientation::Plus) == Orientation::Minus);
  CHECK(flip(flip(Orientation::Plus)) == Orientation::Plus);
  CHECK(flip(flip(Orientation::Minus)) == Orientation::Minus);
}

TEST_CASE("dual reverses and flips") {
  CHECK(dual(ObjWord::parse("+")) == ObjWord::parse("-"));
  CHECK(dual(ObjWord::parse("+-+")) == ObjWord::parse("-+-"));
  CHECK(dual(ObjWord()) == ObjWord());  // the unit is its own dual
  CHECK(dual(ObjWord::parse("++-")) == ObjWord::parse("+--"));
}

TEST_CASE("tensor concatenates with the empty word as strict unit") {
  CHECK(tensor(ObjWord::parse("+-"), ObjWord::parse("+")) == ObjWord::parse("+-+"));
  const ObjWord w = ObjWord::parse("-+-");
  CHECK(tensor(ObjWord(), w) == w);
  CHECK(tensor(w, ObjWord()) == w);
  const ObjWord a = ObjWord::parse("+");
  const ObjWord b = ObjWord::parse("-");
  const ObjWord c = ObjWord::parse("+");
  CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
}

TEST_CASE("dual is an involution, exhaustively to length 8") {
  for (const ObjWord& w : laws::all_words(8)) {
    CHECK(dual(dual(w)) == w);
  }
}

TEST_CASE("dual is an anti-homomorphism, exhaustively to combined length 8") {
  const auto words = laws::all_words(4);
  for (const ObjWord& w1 : words) {
    for (const ObjWord& w2 : words) {
      if (w1.length() + w2.length() > 8) continue;
      CHECK(dual(tensor(w1, w2)) == tensor(dual(w2), dual(w1)));
    }
  }
}
