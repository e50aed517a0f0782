#include "limfree/tangency.hpp"

#include "limfree/dual.hpp"
#include "limfree/error.hpp"

namespace limfree {

std::string Multiplicity::to_string() const { return value_ ? std::to_string(*value_) : "INFINITE"; }

bool TangentLine::certifies(const Polynomial& f) const {
  const Polynomial factor = Polynomial::linear_factor(p);
  return factor * factor * cofactor + line().as_polynomial() == f;
}

LocalExpansion taylor_shift(const Polynomial& f, const Rational& p) {
  // Synthetic division by (x - p) peels off one shifted coefficient per pass:
  // the remainder of pass i is c_i.
  std::vector<Rational> work(f.coefficients().begin(), f.coefficients().end());
  const std::size_t n = work.size();
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t i = n - 1; i > pass; --i) work[i - 1] += p * work[i];
  }
  return {p, std::move(work)};
}

Multiplicity intersection_multiplicity(const Polynomial& f, const LinearFunction& line, const Rational& p) {
  const Polynomial diff = f - line.as_polynomial();
  if (diff.is_zero()) return Multiplicity::infinite();
  const auto shifted = taylor_shift(diff, p).coeffs;
  std::size_t m = 0;
  while (shifted[m].is_zero()) ++m;
  return Multiplicity::finite(m);
}

bool check_tangency(const Polynomial& f, const LinearFunction& line, const Rational& p) {
  return intersection_multiplicity(f, line, p).at_least(2);
}

TangentLine tangent_at(const Polynomial& f, const Rational& p) {
  const auto expansion = taylor_shift(f, p);
  const auto& c = expansion.coeffs;
  TangentLine t;
  t.p = p;
  const Rational value = c.empty() ? Rational() : c[0];
  t.k = c.size() > 1 ? c[1] : Rational();
  t.b = value - t.k * p;
  if (c.size() > 2) {
    // Tail sum_{i>=2} c_i t^(i-2), moved back to the x basis by shifting with -p.
    Polynomial tail(std::vector<Rational>(c.begin() + 2, c.end()));
    t.cofactor = Polynomial(taylor_shift(tail, -p).coeffs);
  }
  if (!t.certifies(f)) {
    throw InvariantViolation("tangency certificate failed for " + f.to_string() + " at " + p.to_string());
  }
  return t;
}

Polynomial derive_poly(const Polynomial& f) {
  return evaluate(f, Dual<Polynomial>::variable(Polynomial::x())).eps;
}

RationalFunction derive_ratfun(const RationalFunction& r) {
  const auto seed = Dual<Polynomial>::variable(Polynomial::x());
  const auto n = evaluate(r.num(), seed);
  const auto d = evaluate(r.den(), seed);
  // (a + b eps) / (c + d eps) = a/c + (b c - a d)/c^2 eps
  return {n.eps * d.real - n.real * d.eps, d.real * d.real};
}

}  // namespace limfree
