#include <catch2/catch_amalgamated.hpp>

#include "drs/fixtures.hpp"
#include "drs/relation.hpp"

using namespace drs;

namespace {

Subset bits(std::initializer_list<int> xs) {
  Subset s = 0;
  for (int x : xs) s |= Subset{1} << x;
  return s;
}

}  // namespace

TEST_CASE("classification of the bundled spaces") {
  auto ex1 = fixtures::ex1();
  auto p = classify(ex1);
  CHECK(p.up_directed);
  CHECK_FALSE(p.reflexive);
  CHECK_FALSE(p.antisymmetric);
  CHECK_FALSE(p.transitive);
  CHECK_FALSE(p.symmetric);
  REQUIRE(p.reflexive_witness.has_value());
  CHECK(*p.reflexive_witness == 0);

  auto toy = classify(fixtures::toy2());
  CHECK(toy.up_directed);
  CHECK(toy.reflexive);
  CHECK(toy.antisymmetric);
  CHECK(toy.transitive);
  CHECK_FALSE(toy.symmetric);

  auto ch = classify(fixtures::ch3());
  CHECK((ch.up_directed && ch.reflexive && ch.antisymmetric && ch.transitive));

  auto fk = classify(fixtures::fork());
  CHECK((fk.up_directed && fk.reflexive && fk.antisymmetric && fk.transitive));

  // Identity on two points: no common successor for distinct elements.
  auto id = classify(fixtures::id2());
  CHECK_FALSE(id.up_directed);
  REQUIRE(id.up_directed_witness.has_value());
  CHECK(*id.up_directed_witness == std::make_pair(0, 1));
  CHECK((id.reflexive && id.antisymmetric && id.transitive && id.symmetric));
}

TEST_CASE("neighborhood table for ex1") {
  auto s = fixtures::ex1();
  int a = 0, b = 1, c = 2, e = 3, f = 4;

  CHECK(s.pred(a) == bits({c, e, f}));
  CHECK(s.pred(b) == bits({c, e, f}));
  CHECK(s.pred(c) == bits({a, b}));
  CHECK(s.pred(e) == bits({a}));
  CHECK(s.pred(f) == bits({a, b, c, e}));

  CHECK(s.succ(a) == bits({c, e, f}));
  CHECK(s.succ(b) == bits({c, f}));
  CHECK(s.succ(c) == bits({a, b, f}));
  CHECK(s.succ(e) == bits({a, b, f}));
  CHECK(s.succ(f) == bits({a, b}));

  CHECK(s.sym(a) == bits({c, e, f}));
  CHECK(s.sym(b) == bits({c, f}));
  CHECK(s.sym(c) == bits({a, b}));
  CHECK(s.sym(e) == bits({a}));
  CHECK(s.sym(f) == bits({a, b}));

  CHECK(neighborhood(s, f, NbdKind::plain) == s.pred(f));
  CHECK(neighborhood(s, f, NbdKind::inverse) == s.succ(f));
  CHECK(neighborhood(s, f, NbdKind::symmetric) == s.sym(f));

  CHECK(s.upper_bounds(a, b) == bits({c, f}));
  CHECK(s.upper_bounds(b, e) == bits({f}));
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(FiniteRelationSpace({"x", "x"}, {}), Error);
  CHECK_THROWS_AS(FiniteRelationSpace({"x", "y"}, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteRelationSpace({"x"}, {{0, 2}}), Error);
  CHECK_THROWS_AS(fixtures::ex1().index_of("z"), Error);
  try {
    fixtures::ex1().index_of("z");
  } catch (const Error& err) {
    CHECK(err.kind() == Error::Kind::unknown_label);
  }
}

TEST_CASE("reflexive closure adds exactly the diagonal") {
  auto s = fixtures::ex1();
  auto r = reflexive_closure(s);
  CHECK(classify(r).reflexive);
  CHECK(r.pairs().size() == s.pairs().size() + 5);
  for (auto [x, y] : s.pairs()) CHECK(r.related(x, y));
  CHECK(reflexive_closure(r) == r);
}

TEST_CASE("neighborhood-closed families") {
  auto toy = fixtures::toy2();
  CHECK(nbd_closed_family(toy) == std::vector<Subset>{0, 1, 3});
  auto ex1 = fixtures::ex1();
  CHECK(nbd_closed_family(ex1) == std::vector<Subset>{0, 31});
  // Every member of the family really is closed.
  for (Subset A : nbd_closed_family(fixtures::ch3()))
    CHECK(is_nbd_closed(fixtures::ch3(), A));

  FiniteRelationSpace big(
      {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"}, {});
  CHECK_THROWS_AS(nbd_closed_family(big), Error);
}

TEST_CASE("morphism classification") {
  auto ex1 = fixtures::ex1();
  SpaceMap ident(ex1, ex1, {0, 1, 2, 3, 4});
  CHECK(morphism_check(ident).cls == MorphismClass::strong_morphism);

  // Collapse toy2 onto one point of the identity space: a morphism, but the
  // target pair (2,2) has no preimage.
  SpaceMap collapse(fixtures::toy2(), fixtures::id2(), {0, 0});
  auto r = morphism_check(collapse);
  CHECK(r.cls == MorphismClass::morphism);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == std::make_pair(1, 1));

  // The strict arrow of toy2 has no image arrow in the identity space.
  SpaceMap broken(fixtures::toy2(), fixtures::id2(), {0, 1});
  auto nb = morphism_check(broken);
  CHECK(nb.cls == MorphismClass::not_morphism);
  REQUIRE(nb.witness.has_value());
  CHECK(*nb.witness == std::make_pair(0, 1));
}

TEST_CASE("granule counting correspondence") {
  CHECK(granule_correspondence(fixtures::ex1(), fixtures::ex1()));
  CHECK(granule_correspondence(fixtures::toy2(), fixtures::id2()));
  CHECK_FALSE(granule_correspondence(fixtures::toy2(), fixtures::ch3()));
}

TEST_CASE("element list parsing and printing") {
  auto s = fixtures::ex1();
  CHECK(parse_elements(s, "e,c") == bits({2, 3}));
  CHECK(parse_elements(s, " f , a ") == bits({0, 4}));
  CHECK(parse_elements(s, "") == 0);
  CHECK(set_to_string(s, bits({2, 3})) == "{c,e}");
  CHECK(set_to_string(s, 0) == "{}");
  CHECK_THROWS_AS(parse_elements(s, "q"), Error);
}
