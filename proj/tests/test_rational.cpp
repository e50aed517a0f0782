#include <doctest.h>

#include <cmath>
#include <limits>

#include "limfree/error.hpp"
#include "limfree/rational.hpp"
#include "random_poly.hpp"

using limfree::DivisionByZero;
using limfree::Rational;

TEST_CASE("addition") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(0) + Rational(-7, 4) == Rational(-7, 4));
  CHECK(Rational(2, 6) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("multiplication") {
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(-1, 2) * Rational(-1, 2) == Rational(1, 4));
  limfree::testing::Gen gen(1);
  for (int i = 0; i < 50; ++i) {
    const Rational x = gen.rational();
    CHECK(x * Rational(1) == x);
  }
}

TEST_CASE("division") {
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  limfree::testing::Gen gen(2);
  for (int i = 0; i < 50; ++i) {
    const Rational x = gen.nonzero_rational();
    CHECK(x / x == Rational(1));
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("canonical form") {
  const Rational q(6, -4);
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  const Rational zero(0, -17);
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero == Rational());
  CHECK(Rational(q.numerator(), q.denominator()) == q);
}

TEST_CASE("round trip n/d times d") {
  limfree::testing::Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    const auto n = gen.integer(-1000, 1000);
    auto d = gen.integer(-50, 50);
    if (d == 0) d = 7;
    CHECK(Rational(n, d) * Rational(d) == Rational(n));
  }
}

TEST_CASE("field axioms on random triples") {
  limfree::testing::Gen gen(4);
  for (int i = 0; i < 300; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational());
  }
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(pow(Rational(7, 3), 0) == Rational(1));
}

TEST_CASE("text form") {
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(-5).to_string() == "-5");
  CHECK(Rational(-3, 6).to_string() == "-1/2");
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("2.") == Rational(2));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
}

TEST_CASE("float conversion rounds to nearest") {
  CHECK(Rational(1, 10).to_double() == 0.1);
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(-7, 4).to_double() == -1.75);
  // 2^53 + 1 sits halfway between two doubles; ties go to even.
  const mpz_class big = (mpz_class(1) << 53) + 1;
  CHECK(Rational(big).to_double() == 9007199254740992.0);
  CHECK(Rational(mpz_class(1), mpz_class(1) << 1100).to_double() == 0.0);
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(61, 10).to_decimal() == "6.1");
  CHECK(Rational(1, 3).to_decimal() == "0.333333333333");
  CHECK(Rational(1, 1000000).to_decimal() == "1e-06");
}
