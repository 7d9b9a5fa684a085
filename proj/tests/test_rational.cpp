#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mpcmix/error.hpp"
#include "oracles.hpp"

using namespace mpcmix;
using mpcmix::testing::canonical;
using mpcmix::testing::q;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(q("1/6") + q("1/3") == q("1/2"));
  CHECK((q("2/3") * q("3/10")).to_string() == "1/5");
  CHECK(q("3/64") < q("3/4"));
  CHECK((q("3/4") <=> q("3/64")) == std::strong_ordering::greater);
  CHECK(q("1/2") - q("1/2") == 0);
  CHECK((q("1/2") - q("1/2")).to_string() == "0");
  CHECK((q("-4/6") / q("2/3")).to_string() == "-1");
  CHECK(-q("5/3") == q("-5/3"));
  CHECK(q("-7/2").abs() == q("7/2"));
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(q("1/2") / Rational(0), DivisionByZero);
  Rational x = 3;
  CHECK_THROWS_AS(x /= Rational(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational text forms") {
  CHECK(q("6/8").to_string() == "3/4");
  CHECK(q("-6/8").to_string() == "-3/4");
  CHECK(q("+5").to_string() == "5");
  CHECK(q(" 42 ") == 42);
  CHECK(q("0.25") == Rational(1, 4));
  CHECK(q("-1.5") == Rational(-3, 2));
  CHECK(q(".5") == Rational(1, 2));
  CHECK(q("3.") == 3);
  CHECK(q("010/03") == Rational(10, 3));  // leading zeros stay decimal
  CHECK(q("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");

  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.2.3", "0x10", "1e5", "--1", "."}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
}

TEST_CASE("property: every arithmetic result is canonical") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    for (const Rational& r : {a + b, a - b, a * b, -a, a.abs()}) CHECK(canonical(r));
    if (!b.is_zero()) {
      CHECK(canonical(a / b));
      CHECK((a / b) * b == a);
    }
    CHECK(Rational::parse((a + b).to_string()) == a + b);
    // cmp is a total order consistent with subtraction
    CHECK(((a < b) ? (b - a).sign() > 0 : (a - b).sign() >= 0));
  }
}
