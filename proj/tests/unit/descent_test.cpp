#include "doctest.h"

#include "apedwards/descent.hpp"
#include "apedwards/error.hpp"

using namespace apedwards;

namespace {
const Rat b2(2, 3), b3(250, 81), b4(20, 21);
}

TEST_SUITE("descent") {
  TEST_CASE("p-polynomials for the (1,2/3) footer") {
    DescentRow r3 = descent_row(b2, b3, b4, 3, 2);
    CHECK(r3.p_plus.c1 == FieldElem(Rat(-32, 3)));
    CHECK(r3.p_plus.c0 == FieldElem(Rat(2, 3)));
    CHECK(r3.p_minus.c1 == FieldElem(Rat(-136, 81)));
    DescentRow r4 = descent_row(b2, b3, b4, 4, 2);
    CHECK(r4.p_plus.c1 == FieldElem(QuadExtElem(Rat(-40, 21), Rat(-2, 21), Int(-6))));
    CHECK(r4.p_minus.c1 == FieldElem(QuadExtElem(Rat(-40, 21), Rat(2, 21), Int(-6))));
    CHECK(r4.alpha * r4.alpha == FieldElem(r4.d));
  }

  TEST_CASE("product of conjugate p's is rational") {
    for (int l = 1; l <= 3; ++l) {
      DescentRow r = descent_row(b2, b3, b4, 4, l);
      for (long n = -3; n <= 3; ++n) {
        Rat t(n, 2);
        CHECK((r.p_plus.eval(t) * r.p_minus.eval(t)).is_rational());
      }
    }
  }

  TEST_CASE("H curve has points over the trivial t") {
    DescentRow r3 = descent_row(b2, b3, b4, 3, 2), r4 = descent_row(b2, b3, b4, 4, 2);
    HCurve h = h_curve(r3, r4, Rat(1), -1, 1);
    CHECK(h.disc == Int(-6));
    CHECK(h.coeffs[4] == FieldElem(Rat(1)));
    CHECK(h.has_point_at(Rat(0)));
    CHECK(h.has_point_at(std::nullopt));
    CHECK(is_trivial_t(Rat(0), b2));
    CHECK(is_trivial_t(b2, b2));
    CHECK(is_trivial_t(std::nullopt, b2));
    CHECK_FALSE(is_trivial_t(Rat(5), b2));
  }

  TEST_CASE("field mismatch between rows") {
    DescentRow r3 = descent_row(Rat(2), Rat(3), Rat(5), 3, 1);
    DescentRow r4 = descent_row(Rat(2), Rat(3), Rat(5), 4, 1);
    if (r3.alpha.disc() && r4.alpha.disc() && *r3.alpha.disc() != *r4.alpha.disc()) {
      CHECK_THROWS_AS(h_curve(r3, r4, Rat(1), 1, 1), Error);
    }
  }

  TEST_CASE("bad row arguments") {
    CHECK_THROWS_AS(descent_row(b2, b3, b4, 5, 1), Error);
    CHECK_THROWS_AS(descent_row(b2, b3, b4, 3, 0), Error);
  }
}
