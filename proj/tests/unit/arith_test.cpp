#include "doctest.h"

#include "apedwards/error.hpp"
#include "apedwards/quadext.hpp"
#include "apedwards/rational.hpp"

using namespace apedwards;

TEST_SUITE("rational") {
  TEST_CASE("parse and normalise") {
    CHECK(Rat::parse("-6/4") == Rat(-3, 2));
    CHECK(Rat::parse("-10") == Rat(-10));
    CHECK(Rat::parse("0/5").is_zero());
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    CHECK_THROWS_AS(Rat::parse("abc"), Error);
    CHECK_THROWS_AS(Rat::parse(""), Error);
    CHECK_THROWS_AS(Rat::parse("6/-4"), Error);
    try {
      Rat(Int(1), Int(0));
      FAIL("expected ZeroDenominator");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroDenominator);
    }
  }

  TEST_CASE("field operations") {
    Rat a(3, 4), b(-5, 6);
    CHECK(a + b == Rat(-1, 12));
    CHECK(a * b == Rat(-5, 8));
    CHECK(a / b == Rat(-9, 10));
    CHECK((a - a).is_zero());
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(-7, 3).abs() == Rat(7, 3));
    CHECK_THROWS_AS(a / Rat(0), Error);
    CHECK_THROWS_AS(Rat(0).inverse(), Error);
    CHECK(Rat(1, 3) < Rat(1, 2));
  }

  TEST_CASE("squares and heights") {
    CHECK(is_square(Rat(49, 121)) == Rat(7, 11));
    CHECK_FALSE(is_square(Rat(2, 9)));
    CHECK_FALSE(is_square(Rat(-4)));
    CHECK(is_square(Rat(0)) == Rat(0));
    CHECK(int_sqrt_exact(Int("152415787532388367501905199875019052100")) == Int("12345678901234567890"));
    CHECK_FALSE(int_sqrt_exact(Int(-1)));
    CHECK(height(Rat(-7, 3)) == 7);
    CHECK(height(Rat(2, 9)) == 9);
    std::vector<Rat> v{Rat(1, 2), Rat(-3, 4), Rat(0)};
    CHECK(primitive_integer_vector(v) == std::vector<Int>{2, -3, 0});
    CHECK(projective_height(v) == 3);
    CHECK(squarefree_part(Int(-72)) == -2);
    CHECK(squarefree_part(Int(50)) == 2);
  }

  TEST_CASE("small factorisation") {
    auto f = factor_small(Int(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, unsigned>{2, 3});
    CHECK(f[1] == std::pair<Int, unsigned>{3, 2});
    CHECK(f[2] == std::pair<Int, unsigned>{5, 1});
  }
}

TEST_SUITE("quadext") {
  TEST_CASE("make pulls square factors") {
    auto v = QuadExtElem::make(Rat(1), Rat(1), Rat(-24));
    REQUIRE(std::holds_alternative<QuadExtElem>(v));
    auto e = std::get<QuadExtElem>(v);
    CHECK(e.disc() == -6);
    CHECK(e.coef() == Rat(2));
    auto r = QuadExtElem::make(Rat(1), Rat(3), Rat(4, 9));
    REQUIRE(std::holds_alternative<Rat>(r));
    CHECK(std::get<Rat>(r) == Rat(3));
  }

  TEST_CASE("arithmetic in Q(sqrt(-6))") {
    QuadExtElem a(Rat(1), Rat(2), Int(-6)), b(Rat(-3, 2), Rat(1, 3), Int(-6));
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == QuadExtElem(Rat(1), Rat(0), Int(-6)));
    CHECK(a.norm() == Rat(25));
    CHECK((a * a).sqrt().has_value());
    CHECK(QuadExtElem::parse(a.str()) == a);
    CHECK(QuadExtElem::parse("-40/21-2/21*sqrt(-6)") == QuadExtElem(Rat(-40, 21), Rat(-2, 21), Int(-6)));
  }

  TEST_CASE("field mismatch") {
    QuadExtElem a(Rat(1), Rat(1), Int(2)), b(Rat(1), Rat(1), Int(3));
    try {
      (void)(a + b);
      FAIL("expected FieldMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FieldMismatch);
    }
  }

  TEST_CASE("FieldElem lifts rationals") {
    FieldElem r(Rat(2));
    FieldElem s(QuadExtElem(Rat(0), Rat(1), Int(5)));
    FieldElem sum = r + s;
    CHECK(sum.disc() == Int(5));
    CHECK((s * s).as_rational() == Rat(5));
    CHECK(FieldElem(Rat(9, 4)).sqrt() == FieldElem(Rat(3, 2)));
    CHECK_FALSE(FieldElem(Rat(5)).sqrt());
    CHECK(FieldElem(Rat(5)).sqrt(Int(5)) == s);
    CHECK(parse_field_elem("3/7") == FieldElem(Rat(3, 7)));
  }
}
