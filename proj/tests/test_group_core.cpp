#include <doctest.h>

#include <stdexcept>

#include "sepinv/group.hpp"
#include "sepinv/quaternion.hpp"

using namespace sepinv;

TEST_SUITE_BEGIN("group-core");

TEST_CASE("cyclic groups") {
  CHECK_THROWS_AS(build_cyclic(0), std::invalid_argument);

  GroupTable c1 = build_cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.element_order(0) == 1);

  GroupTable c6 = build_cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(c6.element_order(1) == 6);
  CHECK(c6.label(0) == "g^0");
  CHECK(c6.label(5) == "g^5");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(c6.mul(a, b) == c6.mul(b, a));
}

TEST_CASE("dicyclic groups realize the presentation") {
  CHECK_THROWS_AS(build_dicyclic(1), std::invalid_argument);

  GroupTable q8 = build_dicyclic(2);
  CHECK(q8.order() == 8);

  GroupTable d3 = build_dicyclic(3);
  CHECK(d3.order() == 12);
  int a = 1;            // a^1
  int b = 2 * 3;        // index of b = a^0 b
  CHECK(d3.element_order(a) == 6);
  CHECK(d3.element_order(b) == 4);
  // b^2 = a^n and b a b^-1 = a^-1
  CHECK(d3.mul(b, b) == 3);
  CHECK(d3.mul(d3.mul(b, a), d3.inverse(b)) == d3.inverse(a));

  // exactly one element of order 2 (namely a^n = b^2)
  for (int n = 2; n <= 8; ++n) {
    GroupTable g = build_dicyclic(n);
    int count = 0;
    for (int x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 2) ++count;
    CHECK(count == 1);
    CHECK(g.element_order(n) == 2);  // a^n
  }

  // dicyclic n=5: center = {1, a^5}
  GroupTable d5 = build_dicyclic(5);
  ElemSet z = d5.center();
  CHECK(z.count() == 2);
  CHECK(z.test(0));
  CHECK(z.test(5));
}

TEST_CASE("quadratic field scalars multiply exactly") {
  // (1 + sqrt2)(1 - sqrt2) = -1
  QuadraticFieldScalar a(Rational(1), Rational(1), Rational(0), Rational(0));
  QuadraticFieldScalar b(Rational(1), Rational(-1), Rational(0), Rational(0));
  CHECK(a * b == QuadraticFieldScalar(Rational(-1)));
  // (sqrt2 * sqrt5)^2 = 10
  QuadraticFieldScalar s10(Rational(0), Rational(0), Rational(0), Rational(1));
  CHECK(s10 * s10 == QuadraticFieldScalar(Rational(10)));
  // golden ratio: phi^2 = phi + 1
  QuadraticFieldScalar phi(Rational(1, 2), Rational(0), Rational(1, 2), Rational(0));
  CHECK(phi * phi == phi + QuadraticFieldScalar(Rational(1)));
}

TEST_CASE("binary polyhedral groups have the right orders and centers") {
  GroupTable tet = build_binary_polyhedral(PolyhedralKind::tetrahedral);
  GroupTable oct = build_binary_polyhedral(PolyhedralKind::octahedral);
  GroupTable ico = build_binary_polyhedral(PolyhedralKind::icosahedral);
  CHECK(tet.order() == 24);
  CHECK(oct.order() == 48);
  CHECK(ico.order() == 120);
  CHECK(tet.center().count() == 2);
  CHECK(oct.center().count() == 2);
  CHECK(ico.center().count() == 2);
}

TEST_CASE("abelianization orders distinguish the double covers") {
  CHECK(build_binary_polyhedral(PolyhedralKind::tetrahedral).abelianization_order() == 3);
  CHECK(build_binary_polyhedral(PolyhedralKind::octahedral).abelianization_order() == 2);
  CHECK(build_binary_polyhedral(PolyhedralKind::icosahedral).abelianization_order() == 1);
}

TEST_CASE("permutation fixtures") {
  CHECK(build_alternating(4).order() == 12);
  CHECK(build_alternating(5).order() == 60);
  CHECK(build_symmetric(3).order() == 6);
  CHECK(build_symmetric(4).order() == 24);
  CHECK(build_klein_four().order() == 4);

  GroupTable v4 = build_klein_four();
  for (int x = 1; x < 4; ++x) CHECK(v4.element_order(x) == 2);
}

TEST_CASE("group spec parsing") {
  CHECK(build_from_spec("cyclic:30").order() == 30);
  CHECK(build_from_spec("dicyclic:2").order() == 8);
  CHECK(build_from_spec("binary:tet").order() == 24);
  CHECK(build_from_spec("klein4").order() == 4);
  CHECK_THROWS_AS(build_from_spec("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(build_from_spec("cyclic:x"), std::invalid_argument);
  CHECK_THROWS_AS(build_from_spec("binary:dodeca"), std::invalid_argument);
}

TEST_CASE("table validation rejects broken tables") {
  // A 2x2 table that is not associative / has no identity at 0.
  std::vector<int> bad = {1, 0, 0, 1};
  CHECK_THROWS_AS(GroupTable("bad", 2, bad, {"a", "b"}), std::invalid_argument);
}

TEST_CASE("orders above the cap are rejected") {
  CHECK_THROWS_AS(build_cyclic(201), std::invalid_argument);
  CHECK(build_cyclic(200).order() == 200);
}

TEST_CASE("content hash ignores labels, tracks the table") {
  GroupTable a = build_cyclic(12);
  GroupTable b = build_cyclic(12);
  GroupTable c = build_cyclic(13);
  CHECK(a.content_hash() == b.content_hash());
  CHECK(a.content_hash() != c.content_hash());
}

TEST_SUITE_END();
