#include "limfree/rules.hpp"

#include "limfree/error.hpp"
#include "limfree/tangency.hpp"

namespace limfree {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::sum:
      return "sum";
    case Rule::product:
      return "product";
    case Rule::quotient:
      return "quotient";
    case Rule::chain:
      return "chain";
  }
  return "?";
}

namespace {

RuleReport report(Rule rule, RationalFunction lhs, RationalFunction rhs) {
  const bool holds = lhs == rhs;
  return {rule, std::move(lhs), std::move(rhs), holds};
}

}  // namespace

RuleReport verify_sum(const Polynomial& f, const Polynomial& g) {
  return report(Rule::sum, derive_poly(f + g), derive_poly(f) + derive_poly(g));
}

RuleReport verify_product(const Polynomial& f, const Polynomial& g) {
  return report(Rule::product, derive_poly(f * g), derive_poly(f) * g + f * derive_poly(g));
}

RuleReport verify_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("quotient rule needs a nonzero denominator");
  // Left side reduces f/g first and differentiates the canonical form; the
  // right side applies the formula to the unreduced pair.
  auto lhs = derive_ratfun(RationalFunction(f, g));
  RationalFunction rhs(derive_poly(f) * g - f * derive_poly(g), g * g);
  return report(Rule::quotient, std::move(lhs), std::move(rhs));
}

RuleReport verify_chain(const Polynomial& f, const Polynomial& g) {
  return report(Rule::chain, derive_poly(compose(f, g)), compose(derive_poly(f), g) * derive_poly(g));
}

bool sum_certificates_add(const Polynomial& f, const Polynomial& g, const Rational& p) {
  const TangentLine tf = tangent_at(f, p);
  const TangentLine tg = tangent_at(g, p);
  const TangentLine sum{p, tf.k + tg.k, tf.b + tg.b, tf.cofactor + tg.cofactor};
  return sum.certifies(f + g) && check_tangency(f + g, sum.line(), p);
}

}  // namespace limfree
