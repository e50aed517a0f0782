#include <doctest.h>

#include <cmath>
#include <numbers>

#include "limfree/dual.hpp"
#include "limfree/error.hpp"
#include "limfree/tangency.hpp"
#include "random_poly.hpp"

using namespace limfree;
using limfree::testing::Gen;

namespace {

const Polynomial X = Polynomial::x();
using DQ = Dual<Rational>;

}  // namespace

TEST_CASE("dual add") {
  CHECK(DQ(1, 2) + DQ(3, 4) == DQ(4, 6));
  const DQ u(Rational(2, 3), Rational(-5));
  CHECK(u + DQ() == u);
  CHECK(u + DQ(u.real, -u.eps) == DQ(Rational(4, 3), 0));
}

TEST_CASE("dual mul") {
  const Rational a(5, 7), b(-2, 3);
  CHECK(DQ(a, b) * DQ(a, b) == DQ(a * a, 2 * a * b));
  CHECK(DQ(3, 1) * DQ(3, 1) == DQ(9, 6));
  CHECK(DQ(a, b) * DQ(1, 0) == DQ(a, b));
}

TEST_CASE("dual ring laws and nilpotency") {
  Gen gen(31);
  for (int i = 0; i < 200; ++i) {
    const DQ u(gen.rational(), gen.rational()), v(gen.rational(), gen.rational()), w(gen.rational(), gen.rational());
    CHECK((u + v) + w == u + (v + w));
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * v == v * u);
    CHECK(u * (v + w) == u * v + u * w);
    const DQ pure_eps(0, gen.rational());
    CHECK(pure_eps * pure_eps == DQ());
  }
}

TEST_CASE("dual_eval_poly examples") {
  CHECK(evaluate(X * X * X, DQ(2, 1)) == DQ(8, 12));
  CHECK(evaluate(Polynomial(Rational(-4, 9)), DQ(Rational(7, 3), 1)) == DQ(Rational(-4, 9), 0));
  CHECK(evaluate(X * X, DQ(3, 2)) == DQ(9, 12));
}

TEST_CASE("dual slopes agree with tangent slopes") {
  Gen gen(32);
  for (int i = 0; i < 300; ++i) {
    const Polynomial f = gen.polynomial(10);
    const Rational p = gen.point();
    const auto d = evaluate(f, DQ::variable(p));
    CHECK(d.real == f(p));
    CHECK(d.eps == tangent_at(f, p).k);
  }
}

TEST_CASE("chain rule through duals") {
  Gen gen(33);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = gen.polynomial(5);
    const Polynomial g = gen.polynomial(4);
    const Rational p = gen.point();
    const Rational lhs = evaluate(compose(f, g), DQ::variable(p)).eps;
    const Rational rhs = limfree::testing::power_rule(f)(g(p)) * limfree::testing::power_rule(g)(p);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("elementary functions at the origin") {
  const auto s = evaluate(ElementaryFn{ElementaryKind::sin}, Dual<double>(0, 1));
  CHECK(s.real == 0.0);
  CHECK(s.eps == 1.0);
  const auto e = evaluate(ElementaryFn{ElementaryKind::exp}, Dual<double>(0, 1));
  CHECK(e.real == 1.0);
  CHECK(e.eps == 1.0);
  const auto l = evaluate(ElementaryFn{ElementaryKind::log}, Dual<double>(1, 1));
  CHECK(l.real == 0.0);
  CHECK(l.eps == 1.0);
  const auto c = evaluate(ElementaryFn{ElementaryKind::cos}, Dual<double>(0, 3));
  CHECK(c.real == 1.0);
  CHECK(c.eps == 0.0);
}

TEST_CASE("elementary domain errors") {
  CHECK_THROWS_AS(evaluate(ElementaryFn{ElementaryKind::log}, Dual<double>(0, 1)), DomainError);
  CHECK_THROWS_AS(evaluate(ElementaryFn{ElementaryKind::log}, Dual<double>(-1, 1)), DomainError);
  CHECK_THROWS_AS(evaluate(ElementaryFn{ElementaryKind::tan}, Dual<double>(std::numbers::pi / 2, 1)), DomainError);
  CHECK_THROWS_AS(evaluate(ElementaryFn{ElementaryKind::pow_const, 0.5}, Dual<double>(-2, 1)), DomainError);
  CHECK_NOTHROW(evaluate(ElementaryFn{ElementaryKind::pow_const, 3.0}, Dual<double>(-2, 1)));
  CHECK_NOTHROW(evaluate(ElementaryFn{ElementaryKind::tan}, Dual<double>(1.5, 1)));
}

TEST_CASE("pow_const follows c*a^(c-1)") {
  const auto r = evaluate(ElementaryFn{ElementaryKind::pow_const, 3.0}, Dual<double>(-2, 1));
  CHECK(r.real == doctest::Approx(-8.0));
  CHECK(r.eps == doctest::Approx(12.0));
  const auto q = evaluate(ElementaryFn{ElementaryKind::pow_const, 0.5}, Dual<double>(4, 2));
  CHECK(q.real == doctest::Approx(2.0));
  CHECK(q.eps == doctest::Approx(0.5));
  const auto z = evaluate(ElementaryFn{ElementaryKind::pow_const, 0.0}, Dual<double>(0, 1));
  CHECK(z.real == 1.0);
  CHECK(z.eps == 0.0);
}

TEST_CASE("elementary functions match central differences") {
  const double h = 1e-6;
  struct Case {
    ElementaryFn fn;
    double lo, hi;
  };
  const Case cases[] = {
      {{ElementaryKind::exp}, -3.0, 3.0},       {{ElementaryKind::log}, 0.1, 10.0},
      {{ElementaryKind::sin}, -4.0, 4.0},       {{ElementaryKind::cos}, -4.0, 4.0},
      {{ElementaryKind::tan}, -1.3, 1.3},       {{ElementaryKind::pow_const, 2.5}, 0.2, 5.0},
      {{ElementaryKind::pow_const, -3.0}, 0.5, 4.0},
  };
  Gen gen(34);
  for (const auto& c : cases) {
    for (int i = 0; i < 16; ++i) {
      const double a = gen.uniform(c.lo, c.hi);
      const double eps = evaluate(c.fn, Dual<double>(a, 1.0)).eps;
      const double cd = (evaluate(c.fn, Dual<double>(a + h)).real - evaluate(c.fn, Dual<double>(a - h)).real) / (2 * h);
      CHECK(std::abs(eps - cd) <= 1e-6 * (1 + std::abs(eps)));
    }
  }
}

TEST_CASE("names") {
  CHECK(ElementaryFn::from_name("tan")->kind == ElementaryKind::tan);
  CHECK_FALSE(ElementaryFn::from_name("sinh").has_value());
  CHECK(ElementaryFn{ElementaryKind::log}.name() == "log");
}
