#include "doctest.h"
#include "polnorm/decimal.hpp"
#include "polnorm/errors.hpp"

using polnorm::Decimal;

TEST_CASE("decimal parsing and canonical form") {
  CHECK(Decimal::parse("0").str() == "0");
  CHECK(Decimal::parse("-0").str() == "0");
  CHECK(Decimal::parse("0.500").str() == "0.5");
  CHECK(Decimal::parse("10.250").str() == "10.25");
  CHECK(Decimal::parse("1e3").str() == "1000");
  CHECK(Decimal::parse("2.5e-2").str() == "0.025");
  CHECK(Decimal::parse("-12.340").str() == "-12.34");
  CHECK(Decimal::parse("123456789012345678901234567890.1").str() ==
        "123456789012345678901234567890.1");

  CHECK_THROWS_AS(Decimal::parse(""), polnorm::ParseError);
  CHECK_THROWS_AS(Decimal::parse("1."), polnorm::ParseError);
  CHECK_THROWS_AS(Decimal::parse("abc"), polnorm::ParseError);
  CHECK_THROWS_AS(Decimal::parse("1e999999"), polnorm::ParseError);
  CHECK_THROWS_AS(Decimal::parse("1.5x"), polnorm::ParseError);
}

TEST_CASE("decimal order is exact") {
  CHECK(Decimal::parse("0.1") < Decimal::parse("0.3"));
  CHECK(Decimal::parse("0.3") == Decimal::parse("0.30000"));
  CHECK(Decimal::parse("-1") < Decimal::parse("0.0001"));
  CHECK(Decimal::parse("2") < Decimal::parse("10"));  // not lexicographic
  CHECK(Decimal::parse("0.10000000000000000001") > Decimal::parse("0.1"));
  CHECK(Decimal::parse("1e20") > Decimal::parse("99999999999999999999"));
}

TEST_CASE("decimal arithmetic is closed and exact") {
  const Decimal a = Decimal::parse("18");
  const Decimal b = Decimal::parse("65");
  CHECK(Decimal::midpoint(a, b).str() == "41.5");
  CHECK(Decimal::midpoint(Decimal::parse("0.1"), Decimal::parse("0.2")).str() == "0.15");
  CHECK((a + Decimal::from_int(1)).str() == "19");
  CHECK((a - Decimal::from_int(1)).str() == "17");
  CHECK((Decimal::parse("0.1") + Decimal::parse("0.2")).str() == "0.3");
  CHECK(Decimal::midpoint(Decimal::parse("-3"), Decimal::parse("3")).str() == "0");
}
