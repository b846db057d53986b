#include "doctest.h"

#include "apedwards/error.hpp"
#include "apedwards/models.hpp"

using namespace apedwards;

TEST_SUITE("models") {
  TEST_CASE("quadric model from coefficients") {
    QuadricModel m = quadric_model_from_coefficients({Rat(2), Rat(-1, 3)});
    CHECK(m.variables == 4);
    REQUIRE(m.quadrics.size() == 2);
    std::vector<Int> p{1, 1, 1, 1};
    CHECK(m.contains(std::span<const Int>(p)));
    CHECK_THROWS_AS(quadric_model_from_coefficients({Rat(1)}), Error);
    CHECK_THROWS_AS(quadric_model_from_coefficients({Rat(0)}), Error);
  }

  TEST_CASE("D_1234 degenerates at q = 1 (central) and q = 2 (non-central)") {
    CHECK_THROWS_AS(d1234_model(ProgressionKind::CentralSymmetric, Rat(1)), Error);
    CHECK_THROWS_AS(d1234_model(ProgressionKind::NonCentralSymmetric, Rat(2)), Error);
    CHECK_NOTHROW(d1234_model(ProgressionKind::CentralSymmetric, Rat(2)));
    CHECK(d1234_model(ProgressionKind::CentralSymmetric, Rat(2)).variables == 5);
  }

  TEST_CASE("conic parametrisation lies on the conic") {
    Rat a1(5, 7);
    for (long n = -4; n <= 4; ++n) {
      auto p = conic_parametrize(a1, Rat(n, 3));
      CHECK(p[2] * p[2] == a1 * p[0] * p[0] + (Rat(1) - a1) * p[1] * p[1]);
    }
    auto inf = conic_parametrize(a1, std::nullopt);
    CHECK(inf[2] * inf[2] == a1 * inf[0] * inf[0] + (Rat(1) - a1) * inf[1] * inf[1]);
  }

  TEST_CASE("quartic model agrees with the pulled-back quadric") {
    Rat a1(5, 7), aj(-3, 11);
    auto q = quartic_model(a1, aj);
    for (long n = -5; n <= 5; ++n) {
      Rat t(n, 2);
      auto p = conic_parametrize(a1, t);
      CHECK(eval_poly(q, t) == aj * p[0] * p[0] + (Rat(1) - aj) * p[1] * p[1]);
    }
  }

  TEST_CASE("quartic <-> cubic round trip") {
    Rat a1(5, 7), aj(-3, 11);
    QuarticCubicMap map(quartic_model(a1, aj));
    int round_trips = 0;
    auto q = quartic_model(a1, aj);
    for (long n = -6; n <= 6; ++n) {
      Rat t(n, 5);
      auto X = is_square(eval_poly(q, t));
      if (!X) continue;
      WPoint c = map.to_cubic(t, *X);
      CHECK(map.cubic().contains(c));
      auto back = map.to_quartic(c);
      REQUIRE(back);
      CHECK(back->first == t);
      CHECK(back->second == *X);
      ++round_trips;
    }
    // t = 0 always works: the constant term is a1^2.
    CHECK(round_trips >= 1);

    WPoint base = map.cubic().multiply(map.to_cubic(Rat(0), a1), 1);
    for (long k = 2; k <= 4; ++k) {
      WPoint pk = map.cubic().multiply(base, k);
      if (pk.infinity) continue;
      auto tq = map.to_quartic(pk);
      if (!tq) continue;
      CHECK(tq->second * tq->second == eval_poly(q, tq->first));
      CHECK(map.to_cubic(tq->first, tq->second) == pk);
    }
  }

  TEST_CASE("elliptic model marked point") {
    MarkedCurve m = elliptic_model(Rat(1), Rat(2, 3), 1, 2, 4);
    REQUIRE(m.point);
    CHECK(*m.point == WPoint::affine(Rat(54, 175), Rat(1458, 21875)));
    CHECK(m.curve.contains(*m.point));
  }

  TEST_CASE("b-table models") {
    auto models = genus5_models(Rat(1), Rat(2, 3), {1, 2, 4, 5});
    CHECK(models.size() == 48);
    bool found = false;
    for (const auto& g : models) {
      if (g.available && g.b2 == Rat(2, 3) && ((g.b3 == Rat(250, 81) && g.b4 == Rat(20, 21)) ||
                                                (g.b3 == Rat(20, 21) && g.b4 == Rat(250, 81)))) {
        found = true;
        CHECK(g.N == 7);
      }
    }
    CHECK(found);
  }

  TEST_CASE("quotient curves carry their points") {
    auto cs = quotient_curves(Rat(2, 3), Rat(250, 81), Rat(20, 21));
    for (const auto& c : cs) {
      REQUIRE(c.point);
      CHECK(c.curve.contains(*c.point));
    }
    CHECK_THROWS_AS(quotient_curves(Rat(2), Rat(2), Rat(3)), Error);
  }
}
