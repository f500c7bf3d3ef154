#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("parse_rational accepts p/q and integers with sign") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+7/3") == ratio(7, 3));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
}

TEST_CASE("gaussian rational field operations") {
  const auto a = g("1", "2"), b = g("3", "-1");
  CHECK(a * b == g("5", "5"));
  CHECK((a * b) / b == a);
  CHECK(a + b - b == a);
  CHECK(a.norm2() == 5);
  CHECK(to_string(a) == "1+2i");
  CHECK_THROWS(a / GaussianRational());
}

TEST_CASE("polar values multiply by adding angles mod 1") {
  const PolarValue i(q("1/4"), 1);
  CHECK(i.pow(4).is_one());
  CHECK_FALSE(i.pow(2).is_one());
  CHECK(i.to_gaussian() == g("0", "1"));
  CHECK(i.pow(2).to_gaussian() == g("-1"));
  CHECK(PolarValue(q("5/4"), 2).angle() == q("1/4"));
  CHECK(PolarValue(q("-1/3"), 1).angle() == q("2/3"));
  CHECK_THROWS_AS(static_cast<void>(PolarValue(q("1/3"), 1).to_gaussian()), std::domain_error);
  CHECK_THROWS(PolarValue(q("0"), 0));
  CHECK((PolarValue(q("1/3"), 2) * PolarValue(q("2/3"), q("1/2"))).is_one());
  CHECK((i * i.inverse()).is_one());
}

TEST_CASE("polar products are associative and commutative; identity detection is exact") {
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    PolarValue a(random_rational(rng, 50, 37), abs(random_rational(rng, 9, 5)) + 1);
    PolarValue b(random_rational(rng, 50, 37), abs(random_rational(rng, 9, 5)) + 1);
    PolarValue c(random_rational(rng, 50, 37), abs(random_rational(rng, 9, 5)) + 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a * b * b.inverse()) == a);
    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == (a * a).inverse());
  }
}
