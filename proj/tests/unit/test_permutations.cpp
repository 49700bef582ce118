#include <doctest.h>

#include "cobordia/errors.hpp"
#include "cobordia/permutation.hpp"

using namespace cobordia;

TEST_CASE("one-line notation must be a bijection") {
  CHECK_NOTHROW(Permutation({2, 1, 3}));
  CHECK_THROWS_AS(Permutation({1, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({3, 1}), ValidationError);
  CHECK(Permutation::identity(0) == Permutation());
}

TEST_CASE("composition applies the right factor first") {
  const Permutation id3 = Permutation::identity(3);
  const Permutation swap12({2, 1, 3});
  CHECK(compose(id3, swap12) == swap12);
  CHECK(compose(swap12, id3) == swap12);
  CHECK(compose(swap12, swap12) == id3);

  const Permutation cycle({2, 3, 1});
  CHECK(compose(cycle, compose(cycle, cycle)) == id3);

  // q sends 1 to 2, then p sends 2 to 3.
  const Permutation p({1, 3, 2});
  CHECK(compose(p, cycle).image(1) == 3);

  CHECK_THROWS_AS(compose(Permutation::identity(2), id3), SizeMismatchError);
}

TEST_CASE("include wires d(i) to c(p(i)) on all-plus words") {
  CHECK(include(Permutation::identity(2)) == identity(ObjWord::parse("++")));
  CHECK(include(Permutation({2, 1})) == symmetry(ObjWord::parse("+"), ObjWord::parse("+")));
}

TEST_CASE("include is a faithful functor, sizes <= 4") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    CHECK(include(Permutation::identity(n)) ==
          identity(ObjWord(std::vector<Orientation>(n, Orientation::Plus))));
    for (const Permutation& p : perms) {
      for (const Permutation& q : perms) {
        const DiagMorphism composite = compose(include(p), include(q));
        CHECK(composite == include(compose(p, q)));
        CHECK(composite.circles() == 0);
      }
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = i + 1; j < perms.size(); ++j) {
        CHECK(include(perms[i]) != include(perms[j]));
      }
    }
  }
}

TEST_CASE("include is strict monoidal over block sums, sizes <= 3") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (const Permutation& p : all_permutations(n)) {
        for (const Permutation& q : all_permutations(m)) {
          CHECK(include(block_sum(p, q)) == tensor(include(p), include(q)));
        }
      }
    }
  }
}

TEST_CASE("permutation JSON uses one-line arrays") {
  const Permutation p({2, 1, 3});
  CHECK(permutation_to_json(p).dump() == "[2,1,3]");
  CHECK(permutation_from_json(nlohmann::json::parse("[2,1,3]")) == p);
  CHECK(permutation_from_json(nlohmann::json::parse("[]")) == Permutation());
  CHECK_THROWS_AS(permutation_from_json(nlohmann::json::parse("[2,2]")), SchemaError);
  CHECK_THROWS_AS(permutation_from_json(nlohmann::json::parse("[4,1]")), SchemaError);
  CHECK_THROWS_AS(permutation_from_json(nlohmann::json::parse("{}")), SchemaError);
}
