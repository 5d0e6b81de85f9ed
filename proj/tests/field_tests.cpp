#include "doctest.h"

#include <uhg/error.hpp>
#include <uhg/field.hpp>

using namespace uhg;

TEST_CASE("rational context arithmetic") {
  FieldCtx q = FieldCtx::rationals();
  CHECK(q.is_rational());
  CHECK_FALSE(q.is_prime());

  Fq a = Fq::parse(q, "2/3");
  Fq b = Fq::parse(q, "1/6");
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/2");
  CHECK((a * b).str() == "1/9");
  CHECK((a / b).str() == "4");
  CHECK((-a).str() == "-2/3");
  CHECK(a.inverse().str() == "3/2");
  CHECK(Fq(q, mpq_class(4, 6)) == a);
  CHECK(Fq::cmp(b, a) < 0);
  CHECK(Fq::zero(q).is_zero());
  CHECK(Fq::one(q).is_one());
  CHECK_THROWS_AS(Fq::zero(q).inverse(), Error);
  CHECK_THROWS_AS(a / Fq::zero(q), Error);
}

TEST_CASE("prime context arithmetic") {
  FieldCtx f7 = FieldCtx::prime(7);
  CHECK(f7.is_prime());
  CHECK(f7.modulus() == 7);

  Fq three(f7, 3);
  Fq five(f7, 5);
  CHECK((three * five).is_one());
  CHECK((three + five).str() == "1");
  CHECK(five.inverse() == three);
  CHECK(Fq(f7, -1) == Fq(f7, 6));
  CHECK(Fq(f7, 10) == Fq(f7, 3));
}

TEST_CASE("context parsing") {
  CHECK(FieldCtx::parse("rational").is_rational());
  FieldCtx f11 = FieldCtx::parse("fp:11");
  CHECK(f11.modulus() == 11);
  CHECK(f11.str() == "fp:11");
  CHECK(FieldCtx::rationals().str() == "rational");
  CHECK_THROWS_AS(FieldCtx::parse("fp:2"), Error);
  CHECK_THROWS_AS(FieldCtx::parse("fp:9"), Error);
  CHECK_THROWS_AS(FieldCtx::parse("fp:1"), Error);
  CHECK_THROWS_AS(FieldCtx::parse("junk"), Error);
}

TEST_CASE("square roots per field") {
  FieldCtx q = FieldCtx::rationals();
  Fq nine_over_four = Fq::parse(q, "9/4");
  CHECK(is_square(nine_over_four));
  auto r = sqrt_in_field(nine_over_four);
  REQUIRE(r.has_value());
  CHECK(r->str() == "3/2");
  CHECK_FALSE(is_square(Fq(q, 2)));
  CHECK_FALSE(sqrt_in_field(Fq(q, 2)).has_value());
  CHECK_FALSE(is_square(Fq(q, -1)));

  FieldCtx f7 = FieldCtx::prime(7);
  auto s = sqrt_in_field(Fq(f7, 2));
  REQUIRE(s.has_value());
  CHECK(s->str() == "3");
  CHECK((*s) * (*s) == Fq(f7, 2));

  FieldCtx f13 = FieldCtx::prime(13);
  CHECK_FALSE(is_square(Fq(f13, 5)));
  CHECK(is_square(Fq(f13, 12)));
}
