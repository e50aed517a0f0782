#pragma once

#include <string>

#include "limfree/polynomial.hpp"
#include "limfree/rational.hpp"

namespace limfree {

enum class Rule { sum, product, quotient, chain };

std::string to_string(Rule rule);

/// Both sides of a differentiation rule, computed by independent routes.
struct RuleReport {
  Rule rule;
  RationalFunction lhs;
  RationalFunction rhs;
  bool holds;
};

/// (f + g)' against f' + g'.
RuleReport verify_sum(const Polynomial& f, const Polynomial& g);
/// (f g)' against f' g + f g'.
RuleReport verify_product(const Polynomial& f, const Polynomial& g);
/// (f/g)' against (f' g - f g') / g^2. Throws DivisionByZero when g is zero.
RuleReport verify_quotient(const Polynomial& f, const Polynomial& g);
/// (f o g)' against (f' o g) g'.
RuleReport verify_chain(const Polynomial& f, const Polynomial& g);

/// Adds the tangency certificates of f and g at p and checks that the sum
/// certifies f + g at p with slope k_f + k_g.
bool sum_certificates_add(const Polynomial& f, const Polynomial& g, const Rational& p);

}  // namespace limfree
