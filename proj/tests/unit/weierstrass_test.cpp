#include "doctest.h"

#include "apedwards/error.hpp"
#include "apedwards/models.hpp"
#include "apedwards/weierstrass.hpp"

using namespace apedwards;

TEST_SUITE("weierstrass") {
  TEST_CASE("singular cubic is rejected") {
    CHECK_THROWS_AS(WeierstrassCurve(Rat(0), Rat(0), Rat(0)), Error);
    CHECK_THROWS_AS(WeierstrassCurve::from_roots(Rat(1), Rat(1), Rat(2)), Error);
  }

  TEST_CASE("group law on y^2 = x^3 - 2") {
    auto e = WeierstrassCurve::short_form(Rat(0), Rat(-2));
    WPoint p = WPoint::affine(Rat(3), Rat(5));
    REQUIRE(e.contains(p));
    WPoint two = e.multiply(p, 2);
    CHECK(two == WPoint::affine(Rat(129, 100), Rat(-383, 1000)));
    CHECK(e.add(p, e.negate(p)).infinity);
    CHECK(e.multiply(p, 5) == e.add(e.multiply(p, 2), e.multiply(p, 3)));
    CHECK(e.multiply(p, -1) == e.negate(p));
    CHECK(e.multiply(p, 0).infinity);
  }

  TEST_CASE("two-torsion roots") {
    auto e = WeierstrassCurve::from_roots(Rat(0), Rat(-1), Rat(2));
    auto r = e.two_torsion_roots();
    REQUIRE(r);
    for (const auto& x : *r) CHECK(e.multiply(WPoint::affine(x, Rat(0)), 2).infinity);
    CHECK_FALSE(WeierstrassCurve::short_form(Rat(0), Rat(-2)).two_torsion_roots());
  }

  TEST_CASE("integral model and match_models") {
    MarkedCurve m = elliptic_model(Rat(1), Rat(1, 2), 1, 2, 3);
    IntegralModel im = integral_model(m.curve);
    CHECK(im.curve.is_short());
    CHECK(im.curve.has_integer_coefficients());
    CHECK(im.curve.c4() == Rat(-1698765075));
    CHECK(im.curve.c6() == Rat(Int("-15805306487250")));
    CHECK(im.map.u == Rat(567));
    WPoint img = im.map.apply(*m.point);
    CHECK(img == WPoint::affine(Rat(73479), Rat(16003008)));
    CHECK(im.curve.contains(img));
    auto scaled = WeierstrassCurve::short_form(im.curve.c4() * Rat(16), im.curve.c6() * Rat(64));
    CHECK(match_models(im.curve, scaled) == Rat(2));
    CHECK_FALSE(match_models(im.curve, WeierstrassCurve::short_form(Rat(1), Rat(1))));
  }

  TEST_CASE("certificate for a table row") {
    MarkedCurve m = elliptic_model(Rat(1), Rat(1, 2), 1, 2, 3);
    RankCertificate c = certify_infinite_order(m.curve, *m.point);
    CHECK(c.infinite_order);
    CHECK(c.verdicts_agree);
    CHECK(c.nagell_lutz.n == 3);
    CHECK(c.nagell_lutz.multiple.x == Rat(5714173479, 2209));
    CHECK(c.mazur.applicable);
    CHECK(c.mazur.infinite_order);
  }

  TEST_CASE("torsion point is certified finite") {
    auto e = WeierstrassCurve::from_roots(Rat(0), Rat(-1), Rat(1));
    RankCertificate c = certify_infinite_order(e, WPoint::affine(Rat(0), Rat(0)));
    CHECK_FALSE(c.infinite_order);
    CHECK(c.verdicts_agree);
  }

  TEST_CASE("point off the curve") {
    auto e = WeierstrassCurve::short_form(Rat(0), Rat(-2));
    CHECK_THROWS_AS(certify_infinite_order(e, WPoint::affine(Rat(1), Rat(1))), Error);
  }

  TEST_CASE("integer roots of depressed cubics") {
    // (x-2)(x+3)(x+(-1)) = x^3 - 7x + 6
    auto r = integer_roots_depressed_cubic(Int(-7), Int(6));
    CHECK(r == std::vector<Int>{-3, 1, 2});
    CHECK(integer_roots_depressed_cubic(Int(0), Int(-2)).empty());
  }
}
