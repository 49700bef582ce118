#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cobordia/enumerate.hpp"
#include "cobordia/errors.hpp"
#include "cobordia/laws.hpp"

using namespace cobordia;

namespace {

// Independent oracle. Enumerates every perfect matching of the boundary
// points with no sign knowledge, then keeps a matching only when each of its
// pairs joins one '+' and one '-' point of the relabelled word
// dual(dom) ++ cod, with a domain point i sitting at reversed position
// n+1-i. This is a different sign criterion than the one the library applies
// in direct coordinates, so agreement is meaningful.
struct RelabelOracle {
  ObjWord dom;
  ObjWord cod;
  ObjWord relabelled;  // dual(dom) ++ cod

  RelabelOracle(ObjWord d, ObjWord c)
      : dom(std::move(d)), cod(std::move(c)), relabelled(tensor(dual(dom), cod)) {}

  Orientation label(Endpoint e) const {
    const std::size_t n = dom.length();
    const std::size_t position = e.side == Side::Dom ? n + 1 - e.index : n + e.index;
    return relabelled[position - 1];
  }

  bool pair_ok(Endpoint a, Endpoint b) const { return label(a) != label(b); }

  void matchings(std::vector<Endpoint>& points, std::vector<Strand>& current,
                 std::vector<Pairing>& out) const {
    if (points.empty()) {
      out.emplace_back(current);
      return;
    }
    const Endpoint head = points.front();
    for (std::size_t k = 1; k < points.size(); ++k) {
      const Endpoint partner = points[k];
      if (!pair_ok(head, partner)) continue;
      std::vector<Endpoint> rest(points.begin() + 1, points.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k - 1));
      current.emplace_back(head, partner);
      matchings(rest, current, out);
      current.pop_back();
    }
  }

  std::vector<Pairing> all() const {
    std::vector<Endpoint> points;
    for (std::uint32_t i = 1; i <= dom.length(); ++i) points.push_back(Endpoint::dom(i));
    for (std::uint32_t j = 1; j <= cod.length(); ++j) points.push_back(Endpoint::cod(j));
    std::vector<Pairing> out;
    if (points.size() % 2 != 0) return out;
    std::vector<Strand> current;
    matchings(points, current, out);
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

TEST_CASE("frozen pairing counts") {
  CHECK(enumerate_pairings(ObjWord::parse("+"), ObjWord::parse("+")).size() == 1);
  CHECK(enumerate_pairings(ObjWord::parse("+-"), ObjWord::parse("+-")).size() == 2);
  CHECK(enumerate_pairings(ObjWord::parse("+"), ObjWord::parse("-")).empty());
  CHECK(enumerate_pairings(ObjWord(), ObjWord()).size() == 1);
  CHECK(enumerate_pairings(ObjWord(), ObjWord())[0] == Pairing());
}

TEST_CASE("odd point counts have no total pairings") {
  CHECK(enumerate_pairings(ObjWord::parse("+"), ObjWord::parse("++")).empty());
  CHECK(enumerate_pairings(ObjWord::parse("+"), ObjWord()).empty());
}

TEST_CASE("enumeration refuses beyond the point bound") {
  const ObjWord big = ObjWord::parse("++++++++++");  // 20 combined points
  CHECK_THROWS_AS(enumerate_pairings(big, big), ResourceLimitError);
  CHECK_NOTHROW(enumerate_pairings(big, big, 20));
  CHECK_THROWS_AS(enumerate_pairings(ObjWord::parse("+"), ObjWord::parse("+"), 1),
                  ResourceLimitError);
}

TEST_CASE("enumeration agrees with the relabelling oracle, combined length <= 6") {
  const auto words = laws::all_words(3);
  for (const ObjWord& dom : words) {
    for (const ObjWord& cod : words) {
      if (dom.length() + cod.length() > 6) continue;
      const RelabelOracle oracle(dom, cod);
      const auto expected = oracle.all();
      const auto actual = enumerate_pairings(dom, cod);
      REQUIRE(actual.size() == expected.size());
      CHECK(actual == expected);
    }
  }
}

TEST_CASE("every accepted strand joins opposite labels of the relabelled boundary") {
  const auto words = laws::all_words(3);
  for (const ObjWord& dom : words) {
    for (const ObjWord& cod : words) {
      const RelabelOracle oracle(dom, cod);
      for (const Pairing& p : enumerate_pairings(dom, cod)) {
        for (const Strand& s : p) {
          CHECK(oracle.label(s.first()) != oracle.label(s.second()));
        }
      }
    }
  }
}

TEST_CASE("bending all strands preserves the pairing count, combined length <= 6") {
  const auto words = laws::all_words(3);
  for (const ObjWord& f : words) {
    for (const ObjWord& g : words) {
      if (f.length() + g.length() > 6) continue;
      const auto direct = enumerate_pairings(f, g).size();
      const auto bent = enumerate_pairings(ObjWord(), tensor(dual(f), g)).size();
      CHECK(direct == bent);
    }
  }
}

TEST_CASE("enumeration output is canonically ordered and duplicate-free") {
  const auto pairings = enumerate_pairings(ObjWord::parse("++--"), ObjWord::parse("++--"));
  CHECK(std::is_sorted(pairings.begin(), pairings.end()));
  CHECK(std::adjacent_find(pairings.begin(), pairings.end()) == pairings.end());
  CHECK(!pairings.empty());
}
