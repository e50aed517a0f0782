#include "limfree/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace limfree {

Rational increment(const Polynomial& f, const Rational& x0, const Rational& dx) { return f(x0 + dx) - f(x0); }

Rational secant_slope(const Polynomial& f, const Rational& x0, const Rational& dx) {
  if (dx.is_zero()) throw std::invalid_argument("secant slope needs a nonzero increment");
  return increment(f, x0, dx) / dx;
}

Rational differential(const Polynomial& f, const Rational& x0, const Rational& dx) {
  return derive_poly(f)(x0) * dx;
}

Decomposition decompose(const Polynomial& f, const Rational& x0) {
  auto c = taylor_shift(f, x0).coeffs;
  Decomposition d;
  d.x0 = x0;
  if (!c.empty()) d.value = c[0];
  if (c.size() > 1) d.slope = c[1];
  for (std::size_t i = 0; i < std::min<std::size_t>(2, c.size()); ++i) c[i] = Rational();
  d.remainder = Polynomial(std::move(c));
  return d;
}

Multiplicity remainder_valuation(const Decomposition& d) {
  if (d.remainder.is_zero()) return Multiplicity::infinite();
  auto c = d.remainder.coefficients();
  std::size_t v = 0;
  while (c[v].is_zero()) ++v;
  return Multiplicity::finite(v);
}

std::vector<QuotientRow> quotient_table(const Polynomial& f, const Rational& x0, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("quotient table needs at least one step");
  const Rational slope = derive_poly(f)(x0);
  std::vector<QuotientRow> rows;
  rows.reserve(steps);
  Rational h(1);
  for (std::size_t i = 0; i < steps; ++i) {
    h /= Rational(10);
    QuotientRow row;
    row.h = h;
    row.dy = increment(f, x0, h);
    row.quotient = row.dy / h;
    row.gap = row.quotient - slope;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<Rational> dominance_radius(const Decomposition& d) {
  const auto v = remainder_valuation(d);
  if (v.is_infinite()) return std::nullopt;
  const auto c = d.remainder.coefficients();
  const Rational lowest = abs(c[v.value()]);
  // For h <= 1 every higher term is bounded by |c_i| h^(v+1).
  Rational higher;
  for (std::size_t i = v.value() + 1; i < c.size(); ++i) higher += abs(c[i]);
  if (higher.is_zero()) return Rational(1);
  return std::min(Rational(1), lowest / (Rational(2) * higher));
}

}  // namespace limfree
