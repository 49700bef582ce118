#include <doctest.h>

#include <algorithm>
#include <random>

#include "cobordia/algebra.hpp"
#include "cobordia/enumerate.hpp"
#include "cobordia/errors.hpp"
#include "cobordia/laws.hpp"

using namespace cobordia;

namespace {

Pairing strands(std::initializer_list<Strand> list) { return Pairing(std::vector<Strand>(list)); }

}  // namespace

TEST_CASE("identity wiring") {
  CHECK(identity(ObjWord()) == DiagMorphism(ObjWord(), ObjWord(), Pairing(), 0));
  const DiagMorphism id_pm = identity(ObjWord::parse("+-"));
  CHECK(id_pm.pairing() == strands({Strand(Endpoint::dom(1), Endpoint::cod(1)),
                                    Strand(Endpoint::dom(2), Endpoint::cod(2))}));
  CHECK(id_pm.circles() == 0);
  for (const ObjWord& w : laws::all_words(4)) {
    CHECK(classify_sections(identity(w)) == SectionCounts{w.length(), 0, 0});
  }
}

TEST_CASE("symmetry wiring") {
  const DiagMorphism s = symmetry(ObjWord::parse("+"), ObjWord::parse("-"));
  CHECK(s.dom() == ObjWord::parse("+-"));
  CHECK(s.cod() == ObjWord::parse("-+"));
  CHECK(s.pairing() == strands({Strand(Endpoint::dom(1), Endpoint::cod(2)),
                                Strand(Endpoint::dom(2), Endpoint::cod(1))}));
  for (const ObjWord& w : laws::all_words(3)) {
    CHECK(symmetry(w, ObjWord()) == identity(w));
    CHECK(symmetry(ObjWord(), w) == identity(w));
  }
}

TEST_CASE("symmetry composed with its swap is the identity") {
  const auto words = laws::all_words(3);
  for (const ObjWord& w1 : words) {
    for (const ObjWord& w2 : words) {
      CHECK(compose(symmetry(w2, w1), symmetry(w1, w2)) == identity(tensor(w1, w2)));
    }
  }
}

TEST_CASE("eta and epsilon wiring") {
  CHECK(eta(ObjWord()) == identity(ObjWord()));
  CHECK(epsilon(ObjWord()) == identity(ObjWord()));

  const DiagMorphism eta_plus = eta(ObjWord::parse("+"));
  CHECK(eta_plus.dom() == ObjWord());
  CHECK(eta_plus.cod() == ObjWord::parse("-+"));
  CHECK(eta_plus.pairing() == strands({Strand(Endpoint::cod(1), Endpoint::cod(2))}));
  CHECK(eta_plus.circles() == 0);
  // the unique total pairing of that boundary
  CHECK(enumerate_pairings(ObjWord(), ObjWord::parse("-+")).size() == 1);

  const DiagMorphism eta_pm = eta(ObjWord::parse("+-"));
  CHECK(eta_pm.cod() == ObjWord::parse("+-+-"));
  CHECK(eta_pm.pairing() == strands({Strand(Endpoint::cod(1), Endpoint::cod(4)),
                                     Strand(Endpoint::cod(2), Endpoint::cod(3))}));

  const DiagMorphism eps_plus = epsilon(ObjWord::parse("+"));
  CHECK(eps_plus.dom() == ObjWord::parse("+-"));
  CHECK(eps_plus.cod() == ObjWord());
  CHECK(eps_plus.pairing() == strands({Strand(Endpoint::dom(1), Endpoint::dom(2))}));

  const DiagMorphism eps_mp = epsilon(ObjWord::parse("-+"));
  CHECK(eps_mp.pairing() == strands({Strand(Endpoint::dom(1), Endpoint::dom(4)),
                                     Strand(Endpoint::dom(2), Endpoint::dom(3))}));
}

TEST_CASE("the nested unit is the unique choice satisfying both zig-zags") {
  // For w = +- the boundary of the unit admits exactly two total pairings;
  // pair each candidate unit with each candidate counit and check the
  // zig-zag composites. Only nested/nested passes.
  const ObjWord w = ObjWord::parse("+-");
  const ObjWord wd = dual(w);
  const auto unit_candidates = enumerate_pairings(ObjWord(), tensor(wd, w));
  const auto counit_candidates = enumerate_pairings(tensor(w, wd), ObjWord());
  REQUIRE(unit_candidates.size() == 2);
  REQUIRE(counit_candidates.size() == 2);

  std::size_t passing = 0;
  Pairing passing_unit;
  Pairing passing_counit;
  for (const Pairing& up : unit_candidates) {
    for (const Pairing& cp : counit_candidates) {
      const DiagMorphism unit(ObjWord(), tensor(wd, w), up, 0);
      const DiagMorphism counit(tensor(w, wd), ObjWord(), cp, 0);
      const DiagMorphism zig = compose(tensor(counit, identity(w)), tensor(identity(w), unit));
      const DiagMorphism zag = compose(tensor(identity(wd), counit), tensor(unit, identity(wd)));
      if (zig == identity(w) && zag == identity(wd)) {
        ++passing;
        passing_unit = up;
        passing_counit = cp;
      }
    }
  }
  CHECK(passing == 1);
  CHECK(passing_unit == eta(w).pairing());
  CHECK(passing_counit == epsilon(w).pairing());
}

TEST_CASE("composition traces loops through the middle") {
  // one cup meets one cap: a single closed loop
  const DiagMorphism loop = compose(epsilon(ObjWord::parse("-")), eta(ObjWord::parse("+")));
  CHECK(loop == DiagMorphism(ObjWord(), ObjWord(), Pairing(), 1));
  CHECK(cir_formula(epsilon(ObjWord::parse("-")), eta(ObjWord::parse("+"))) == 1);

  // identities compose to identities
  for (const ObjWord& w : laws::all_words(3)) {
    CHECK(compose(identity(w), identity(w)) == identity(w));
    CHECK(cir_formula(identity(w), identity(w)) == 0);
  }
}

TEST_CASE("circles add across parts and across tensor factors") {
  const DiagMorphism cup_mp = eta(ObjWord::parse("+"));   // () -> -+
  const DiagMorphism cap_mp = epsilon(ObjWord::parse("-"));  // -+ -> ()
  const DiagMorphism two_loops =
      compose(tensor(cap_mp, cap_mp), tensor(cup_mp, cup_mp));
  CHECK(two_loops == DiagMorphism(ObjWord(), ObjWord(), Pairing(), 2));

  const DiagMorphism annotated =
      compose(cap_mp.with_circles(3), cup_mp.with_circles(2));
  CHECK(annotated.circles() == 6);  // 2 + 3 + one traced loop
}

TEST_CASE("pinned snake composite: traced loops 0, formula 1") {
  const ObjWord plus = ObjWord::parse("+");
  const DiagMorphism first = tensor(identity(plus), eta(plus));
  const DiagMorphism second = tensor(epsilon(plus), identity(plus));
  CHECK(compose(second, first) == identity(plus));
  const CompositionTrace trace = trace_composition(second, first);
  CHECK(trace.closed_loops == 0);
  CHECK(cir_formula(second, first) == 1);  // the count-triple formula overcounts here
}

TEST_CASE("a four-point cycle is one loop though it consumes two cups") {
  const ObjWord middle = ObjWord::parse("+-+-");
  const DiagMorphism cups(ObjWord(), middle,
                          strands({Strand(Endpoint::cod(1), Endpoint::cod(2)),
                                   Strand(Endpoint::cod(3), Endpoint::cod(4))}),
                          0);
  const DiagMorphism caps(middle, ObjWord(),
                          strands({Strand(Endpoint::dom(1), Endpoint::dom(4)),
                                   Strand(Endpoint::dom(2), Endpoint::dom(3))}),
                          0);
  CHECK(compose(caps, cups) == DiagMorphism(ObjWord(), ObjWord(), Pairing(), 1));
  CHECK(cir_formula(caps, cups) == 2);  // a second shape where the formula overcounts
}

TEST_CASE("composition requires exactly matching boundaries") {
  const DiagMorphism f = identity(ObjWord::parse("+"));
  const DiagMorphism g = identity(ObjWord::parse("-"));
  CHECK_THROWS_AS(compose(f, g), BoundaryMismatchError);
  CHECK_THROWS_AS(cir_formula(f, g), BoundaryMismatchError);
  try {
    compose(f, g);
  } catch (const BoundaryMismatchError& e) {
    CHECK(e.inner_cod() == "-");
    CHECK(e.outer_dom() == "+");
  }
}

TEST_CASE("circle arithmetic refuses to overflow") {
  const DiagMorphism a = identity(ObjWord::parse("+")).with_circles(UINT64_MAX);
  const DiagMorphism b = identity(ObjWord::parse("+")).with_circles(1);
  CHECK_THROWS_AS(compose(a, b), OverflowError);
  CHECK_THROWS_AS(tensor(a, b), OverflowError);
}

TEST_CASE("trace bookkeeping visits every middle point exactly once") {
  const auto words = laws::all_words(3);
  for (const ObjWord& a : words) {
    for (const ObjWord& b : words) {
      for (const ObjWord& c : words) {
        for (const Pairing& gp : enumerate_pairings(a, b)) {
          for (const Pairing& hp : enumerate_pairings(b, c)) {
            const CompositionTrace trace =
                trace_composition(DiagMorphism(b, c, hp, 0), DiagMorphism(a, b, gp, 0));
            std::vector<std::uint32_t> visits = trace.middle_visits;
            std::sort(visits.begin(), visits.end());
            REQUIRE(visits.size() == b.length());
            for (std::uint32_t i = 0; i < visits.size(); ++i) CHECK(visits[i] == i + 1);
            const auto report =
                validate_pairing(a, c, trace.composite, Totality::Required);
            CHECK(report.ok());
          }
        }
      }
    }
  }
}

TEST_CASE("composition result is independent of strand listing order") {
  std::mt19937 shuffle_rng(42);
  const ObjWord a = ObjWord::parse("+-+");
  const ObjWord b = ObjWord::parse("-+-");
  for (const Pairing& gp : enumerate_pairings(a, b)) {
    for (const Pairing& hp : enumerate_pairings(b, a)) {
      const DiagMorphism g(a, b, gp, 0);
      const DiagMorphism h(b, a, hp, 0);
      const DiagMorphism reference = compose(h, g);
      for (int round = 0; round < 5; ++round) {
        std::vector<Strand> gs = gp.strands();
        std::vector<Strand> hs = hp.strands();
        std::shuffle(gs.begin(), gs.end(), shuffle_rng);
        std::shuffle(hs.begin(), hs.end(), shuffle_rng);
        CHECK(compose(DiagMorphism(b, a, Pairing(hs), 0), DiagMorphism(a, b, Pairing(gs), 0)) ==
              reference);
      }
    }
  }
}

TEST_CASE("tensor of morphisms reindexes the second factor") {
  CHECK(tensor(identity(ObjWord::parse("+")), identity(ObjWord::parse("-"))) ==
        identity(ObjWord::parse("+-")));

  const DiagMorphism closed2(ObjWord(), ObjWord(), Pairing(), 2);
  const DiagMorphism closed3(ObjWord(), ObjWord(), Pairing(), 3);
  CHECK(tensor(closed2, closed3) == DiagMorphism(ObjWord(), ObjWord(), Pairing(), 5));

  const DiagMorphism pair = tensor(eta(ObjWord::parse("+")), eta(ObjWord::parse("+")));
  CHECK(pair.cod() == ObjWord::parse("-+-+"));
  CHECK(pair.pairing() == strands({Strand(Endpoint::cod(1), Endpoint::cod(2)),
                                   Strand(Endpoint::cod(3), Endpoint::cod(4))}));
  CHECK(validate_pairing(pair.dom(), pair.cod(), pair.pairing(), Totality::Required).ok());
}

TEST_CASE("dual of a morphism via the bent composite") {
  for (const ObjWord& w : laws::all_words(3)) {
    CHECK(dual(identity(w)) == identity(dual(w)));
  }
  // the dual of the unit on + is the counit on -
  CHECK(dual(eta(ObjWord::parse("+"))) == epsilon(ObjWord::parse("-")));
}

TEST_CASE("dual is an involution, lengths <= 4 and circles <= 2") {
  const auto words = laws::all_words(4);
  for (const ObjWord& a : words) {
    for (const ObjWord& b : words) {
      for (const Pairing& p : enumerate_pairings(a, b)) {
        for (std::uint64_t c = 0; c <= 2; ++c) {
          const DiagMorphism f(a, b, p, c);
          CHECK(dual(dual(f)) == f);
        }
      }
    }
  }
}

TEST_CASE("dual is a contravariant anti-functor, lengths <= 3 and circles <= 1") {
  const auto words = laws::all_words(3);
  for (const ObjWord& a : words) {
    for (const ObjWord& b : words) {
      for (const ObjWord& c : words) {
        for (const Pairing& gp : enumerate_pairings(a, b)) {
          for (const Pairing& hp : enumerate_pairings(b, c)) {
            for (std::uint64_t cg = 0; cg <= 1; ++cg) {
              for (std::uint64_t ch = 0; ch <= 1; ++ch) {
                const DiagMorphism g(a, b, gp, cg);
                const DiagMorphism h(b, c, hp, ch);
                CHECK(dual(compose(h, g)) == compose(dual(g), dual(h)));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("snake identities for every word of length <= 5") {
  for (const ObjWord& w : laws::all_words(5)) {
    const ObjWord wd = dual(w);
    const DiagMorphism zig =
        compose(tensor(epsilon(w), identity(w)), tensor(identity(w), eta(w)));
    const DiagMorphism zag =
        compose(tensor(identity(wd), epsilon(w)), tensor(eta(w), identity(wd)));
    CHECK(zig == identity(w));
    CHECK(zag == identity(wd));
  }
}
