#include <doctest.h>

#include <algorithm>

#include "cobordia/algebra.hpp"
#include "cobordia/enumerate.hpp"
#include "cobordia/errors.hpp"
#include "cobordia/morphism.hpp"

using namespace cobordia;

namespace {

Pairing make_pairing(std::initializer_list<Strand> strands) {
  return Pairing(std::vector<Strand>(strands));
}

}  // namespace

TEST_CASE("strands normalize endpoint order and reject degenerate pairs") {
  const Strand s(Endpoint::cod(2), Endpoint::dom(1));
  CHECK(s.first() == Endpoint::dom(1));
  CHECK(s.second() == Endpoint::cod(2));
  CHECK(s == Strand(Endpoint::dom(1), Endpoint::cod(2)));
  CHECK(s.label() == "d1-c2");
  CHECK_THROWS_AS(Strand(Endpoint::dom(3), Endpoint::dom(3)), ValidationError);
}

TEST_CASE("endpoint order puts domain points before codomain points") {
  CHECK(Endpoint::dom(5) < Endpoint::cod(1));
  CHECK(Endpoint::dom(1) < Endpoint::dom(2));
  CHECK(Endpoint::parse_label("d3") == Endpoint::dom(3));
  CHECK(Endpoint::parse_label("c12") == Endpoint::cod(12));
  CHECK_FALSE(Endpoint::parse_label("d0").has_value());
  CHECK_FALSE(Endpoint::parse_label("x1").has_value());
  CHECK_FALSE(Endpoint::parse_label("d").has_value());
  CHECK_FALSE(Endpoint::parse_label("d1x").has_value());
}

TEST_CASE("validate_pairing accepts/rejects the basic shapes") {
  const ObjWord plus = ObjWord::parse("+");
  const ObjWord minus = ObjWord::parse("-");

  // equal orientations across the boundary
  CHECK(validate_pairing(plus, plus, make_pairing({Strand(Endpoint::dom(1), Endpoint::cod(1))}),
                         Totality::Required)
            .ok());

  // a through-strand needs equal orientations
  const auto sign_report = validate_pairing(
      plus, minus, make_pairing({Strand(Endpoint::dom(1), Endpoint::cod(1))}),
      Totality::Required);
  REQUIRE_FALSE(sign_report.ok());
  CHECK(sign_report.violations[0].kind == ViolationKind::SignMismatch);

  // coverage failure when totality is required
  const ObjWord pm = ObjWord::parse("+-");
  const auto coverage_report = validate_pairing(
      pm, pm, make_pairing({Strand(Endpoint::dom(1), Endpoint::dom(2))}), Totality::Required);
  REQUIRE_FALSE(coverage_report.ok());
  CHECK(std::any_of(coverage_report.violations.begin(), coverage_report.violations.end(),
                    [](const Violation& v) { return v.kind == ViolationKind::UncoveredPoint; }));
}

TEST_CASE("validate_pairing reports every violation, not just the first") {
  const ObjWord pm = ObjWord::parse("+-");
  const auto report = validate_pairing(
      pm, pm,
      make_pairing({Strand(Endpoint::dom(1), Endpoint::dom(2)),
                    Strand(Endpoint::dom(1), Endpoint::cod(1))}),
      Totality::Required);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.size() >= 2);  // overlap on d1 plus uncovered c2
}

TEST_CASE("validate_pairing checks maximality only for partial pairings") {
  const ObjWord pm = ObjWord::parse("+-");
  // Empty pairing on two matchable domain points: not maximal.
  const auto report = validate_pairing(pm, ObjWord(), Pairing(), Totality::Optional);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].kind == ViolationKind::NotMaximal);

  // No sign-compatible strand fits between two '+' points: maximal.
  CHECK(validate_pairing(ObjWord::parse("++"), ObjWord(), Pairing(), Totality::Optional).ok());
}

TEST_CASE("validate_pairing flags out-of-range endpoints") {
  const auto report = validate_pairing(
      ObjWord::parse("+"), ObjWord(), make_pairing({Strand(Endpoint::dom(1), Endpoint::dom(5))}),
      Totality::Optional);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].kind == ViolationKind::IndexOutOfRange);
}

TEST_CASE("classify_sections splits strands by side") {
  CHECK(classify_sections(identity(ObjWord::parse("+-"))) == SectionCounts{2, 0, 0});
  CHECK(classify_sections(eta(ObjWord::parse("+"))) == SectionCounts{0, 0, 1});
  CHECK(classify_sections(epsilon(ObjWord::parse("+"))) == SectionCounts{0, 1, 0});
}

TEST_CASE("section counts add up to the strand count on enumerated pairings") {
  const ObjWord dom = ObjWord::parse("+-");
  const ObjWord cod = ObjWord::parse("-+");
  for (const Pairing& p : enumerate_pairings(dom, cod)) {
    const SectionCounts counts = classify_sections(p);
    CHECK(counts.external + counts.domain_caps + counts.codomain_cups == p.size());
    CHECK(2 * p.size() == dom.length() + cod.length());
  }
}

TEST_CASE("morphism construction rejects invalid pairings") {
  const ObjWord plus = ObjWord::parse("+");
  CHECK_THROWS_AS(DiagMorphism(plus, ObjWord::parse("-"),
                               make_pairing({Strand(Endpoint::dom(1), Endpoint::cod(1))}), 0),
                  ValidationError);
  CHECK_THROWS_AS(DiagMorphism(plus, plus, Pairing(), 0), ValidationError);
}

TEST_CASE("canonical form is idempotent and listing-independent") {
  const ObjWord pm = ObjWord::parse("+-");
  const DiagMorphism a(pm, pm,
                       make_pairing({Strand(Endpoint::dom(1), Endpoint::cod(1)),
                                     Strand(Endpoint::dom(2), Endpoint::cod(2))}),
                       0);
  const DiagMorphism b(pm, pm,
                       make_pairing({Strand(Endpoint::dom(2), Endpoint::cod(2)),
                                     Strand(Endpoint::dom(1), Endpoint::cod(1))}),
                       0);
  CHECK(a == b);
  CHECK(canonical_form(a) == a);
  CHECK(canonical_form(canonical_form(a)) == canonical_form(a));
}

TEST_CASE("circle counts are part of the data") {
  const DiagMorphism plain = identity(ObjWord::parse("+"));
  CHECK(plain != plain.with_circles(1));
  CHECK(plain.with_circles(1) == plain.with_circles(1));
}
