#include <doctest.h>

#include "limfree/error.hpp"
#include "limfree/rules.hpp"
#include "random_poly.hpp"

using namespace limfree;
using limfree::testing::Gen;

namespace {

const Polynomial X = Polynomial::x();
const Polynomial X2 = X * X;
const Polynomial X3 = X * X * X;

}  // namespace

TEST_CASE("sum rule") {
  auto r = verify_sum(X2, X3);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(3 * X2 + 2 * X));
  CHECK(verify_sum(X3 - X + 1, Polynomial()).holds);
  r = verify_sum(X, -X);
  CHECK(r.holds);
  CHECK(r.lhs.num().is_zero());
}

TEST_CASE("product rule") {
  auto r = verify_product(X, X);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(2 * X));
  const Polynomial g = X3 - 4 * X;
  r = verify_product(Polynomial(Rational(5, 3)), g);
  CHECK(r.holds);
  CHECK(r.rhs == RationalFunction(Rational(5, 3) * (3 * X2 - 4)));
  r = verify_product(X2, X3);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(5 * X2 * X2));
}

TEST_CASE("quotient rule") {
  auto r = verify_quotient(Polynomial(1), X);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(Polynomial(-1), X2));
  r = verify_quotient(X2, X);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(Polynomial(1)));
  r = verify_quotient(X3 + X, Polynomial(1));
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(3 * X2 + 1));
  CHECK_THROWS_AS(verify_quotient(X, Polynomial()), DivisionByZero);
}

TEST_CASE("chain rule") {
  auto r = verify_chain(X2, X + 1);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(2 * X + 2));
  const Polynomial g = Rational(1, 2) * X3 - X;
  r = verify_chain(X, g);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(Rational(3, 2) * X2 - 1));
  r = verify_chain(X3, 2 * X);
  CHECK(r.holds);
  CHECK(r.lhs == RationalFunction(24 * X2));
}

TEST_CASE("all rules on a random corpus") {
  Gen gen(51);
  for (int i = 0; i < 150; ++i) {
    const Polynomial f = gen.polynomial(8);
    const Polynomial g = gen.polynomial(8);
    CHECK(verify_sum(f, g).holds);
    CHECK(verify_product(f, g).holds);
    if (!g.is_zero()) CHECK(verify_quotient(f, g).holds);
    CHECK(verify_chain(f, g).holds);
  }
}

TEST_CASE("sum of tangency certificates certifies the sum") {
  Gen gen(52);
  for (int i = 0; i < 200; ++i) {
    CHECK(sum_certificates_add(gen.polynomial(8), gen.polynomial(8), gen.point()));
  }
}
