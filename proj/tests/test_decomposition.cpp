#include <doctest.h>

#include "limfree/decomposition.hpp"
#include "random_poly.hpp"

using namespace limfree;
using limfree::testing::Gen;

namespace {

const Polynomial X = Polynomial::x();

}  // namespace

TEST_CASE("increment") {
  CHECK(increment(X * X, 3, 1) == Rational(7));
  CHECK(increment(X * X * X - X, Rational(2, 7), 0) == Rational(0));
  CHECK(increment(X * X, 3, Rational(1, 10)) == Rational(61, 100));
}

TEST_CASE("secant_slope") {
  CHECK(secant_slope(X * X, 3, Rational(1, 10)) == Rational(61, 10));
  Gen gen(41);
  for (int i = 0; i < 20; ++i) {
    const Rational a = gen.rational(), b = gen.rational();
    CHECK(secant_slope(a * X + b, gen.point(), gen.nonzero_rational()) == a);
  }
  CHECK_THROWS_AS(secant_slope(X * X, 3, 0), std::invalid_argument);
}

TEST_CASE("differential") {
  CHECK(differential(X * X, 3, Rational(1, 10)) == Rational(3, 5));
  CHECK(differential(X * X * X + 5, Rational(-4, 3), 0) == Rational(0));
  CHECK(differential(X * X * X, 1, 2) == Rational(6));
}

TEST_CASE("decompose examples") {
  auto d = decompose(X * X, 3);
  CHECK(d.value == Rational(9));
  CHECK(d.slope == Rational(6));
  CHECK(d.remainder == X * X);
  CHECK(remainder_valuation(d) == Multiplicity::finite(2));

  d = decompose(2 * X + 1, 10);
  CHECK(d.value == Rational(21));
  CHECK(d.slope == Rational(2));
  CHECK(d.remainder.is_zero());
  CHECK(remainder_valuation(d).is_infinite());

  d = decompose(X * X * X, 1);
  CHECK(d.value == Rational(1));
  CHECK(d.slope == Rational(3));
  CHECK(d.remainder == 3 * X * X + X * X * X);

  d = decompose(pow(X, 4), 0);
  CHECK(d.value.is_zero());
  CHECK(d.slope.is_zero());
  CHECK(remainder_valuation(d) == Multiplicity::finite(4));
}

TEST_CASE("decomposition identities on random inputs") {
  Gen gen(42);
  for (int i = 0; i < 300; ++i) {
    const Polynomial f = gen.polynomial(10);
    const Rational x0 = gen.point();
    const auto d = decompose(f, x0);
    // Substitute t = x - x0 and re-expand.
    const Polynomial t = Polynomial::linear_factor(x0);
    CHECK(Polynomial(d.value) + d.slope * t + compose(d.remainder, t) == f);
    CHECK(remainder_valuation(d).at_least(2));
    CHECK(d.slope == tangent_at(f, x0).k);
    CHECK(d.slope == derive_poly(f)(x0));
    const Rational dx = gen.nonzero_rational();
    CHECK(increment(f, x0, dx) - differential(f, x0, dx) == d.remainder(dx));
  }
}

TEST_CASE("quotient_table examples") {
  auto rows = quotient_table(X * X, 3, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].quotient == Rational(61, 10));
  CHECK(rows[1].quotient == Rational(601, 100));
  CHECK(rows[2].quotient == Rational(6001, 1000));
  CHECK(rows[0].gap == Rational(1, 10));
  CHECK(rows[1].gap == Rational(1, 100));
  CHECK(rows[2].gap == Rational(1, 1000));

  for (const auto& r : quotient_table(Rational(-2, 3) * X + 4, Rational(5, 2), 4)) CHECK(r.gap.is_zero());

  rows = quotient_table(X * X * X, 1, 2);
  CHECK(rows[0].gap == Rational(31, 100));
  CHECK(rows[1].gap == Rational(301, 10000));
  CHECK_THROWS_AS(quotient_table(X, 0, 0), std::invalid_argument);
}

TEST_CASE("quotient gaps equal R(h)/h and shrink once the lowest term dominates") {
  Gen gen(43);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = gen.polynomial(8);
    const Rational x0 = gen.point();
    const auto d = decompose(f, x0);
    const auto rows = quotient_table(f, x0, 8);
    const auto radius = dominance_radius(d);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const auto& r = rows[j];
      CHECK(r.quotient == r.dy / r.h);
      CHECK(r.gap * r.h == d.remainder(r.h));
      if (!radius) {
        CHECK(r.gap.is_zero());
      } else if (j > 0 && rows[j - 1].h <= *radius) {
        CHECK(abs(r.gap) < abs(rows[j - 1].gap));
      }
    }
  }
}
