#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "limfree/polynomial.hpp"
#include "limfree/rational.hpp"
#include "limfree/tangency.hpp"

namespace limfree {

/// f(x0 + dx) = value + slope*dx + remainder(dx), remainder of valuation >= 2.
struct Decomposition {
  Rational x0;
  Rational value;
  Rational slope;
  Polynomial remainder;  // in the increment variable
};

/// One row of a difference-quotient table.
struct QuotientRow {
  Rational h;
  Rational dy;
  Rational quotient;  // dy / h
  Rational gap;       // quotient - f'(x0)
};

/// dy = f(x0 + dx) - f(x0).
Rational increment(const Polynomial& f, const Rational& x0, const Rational& dx);

/// (f(x0 + dx) - f(x0)) / dx. Throws std::invalid_argument when dx is zero.
Rational secant_slope(const Polynomial& f, const Rational& x0, const Rational& dx);

/// f'(x0) * dx.
Rational differential(const Polynomial& f, const Rational& x0, const Rational& dx);

Decomposition decompose(const Polynomial& f, const Rational& x0);

/// Index of the lowest nonzero remainder coefficient; infinite for a zero remainder.
Multiplicity remainder_valuation(const Decomposition& d);

/// Rows for h = 1/10, 1/100, ..., 10^-steps. Throws std::invalid_argument when steps is 0.
std::vector<QuotientRow> quotient_table(const Polynomial& f, const Rational& x0, std::size_t steps);

/**
 * Radius below which the lowest-order remainder term dominates the rest:
 * for 0 < h <= radius, |higher terms| <= |lowest term| / 2, so the gap
 * shrinks strictly with each tenfold decrease of h. std::nullopt for a
 * zero remainder.
 */
std::optional<Rational> dominance_radius(const Decomposition& d);

}  // namespace limfree
