#include "limfree/dual.hpp"

#include <cmath>

#include "limfree/error.hpp"

namespace limfree {

std::optional<ElementaryFn> ElementaryFn::from_name(std::string_view name) {
  if (name == "exp") return ElementaryFn{ElementaryKind::exp};
  if (name == "log") return ElementaryFn{ElementaryKind::log};
  if (name == "sin") return ElementaryFn{ElementaryKind::sin};
  if (name == "cos") return ElementaryFn{ElementaryKind::cos};
  if (name == "tan") return ElementaryFn{ElementaryKind::tan};
  return std::nullopt;
}

std::string ElementaryFn::name() const {
  switch (kind) {
    case ElementaryKind::exp:
      return "exp";
    case ElementaryKind::log:
      return "log";
    case ElementaryKind::sin:
      return "sin";
    case ElementaryKind::cos:
      return "cos";
    case ElementaryKind::tan:
      return "tan";
    case ElementaryKind::pow_const:
      return "pow";
  }
  return "?";
}

Dual<double> evaluate(const ElementaryFn& fn, const Dual<double>& at) {
  const double a = at.real;
  const double b = at.eps;
  switch (fn.kind) {
    case ElementaryKind::exp: {
      const double e = std::exp(a);
      return {e, e * b};
    }
    case ElementaryKind::log:
      if (!(a > 0.0)) throw DomainError("log requires a positive argument");
      return {std::log(a), b / a};
    case ElementaryKind::sin:
      return {std::sin(a), std::cos(a) * b};
    case ElementaryKind::cos:
      return {std::cos(a), -std::sin(a) * b};
    case ElementaryKind::tan: {
      const double c = std::cos(a);
      if (std::abs(c) <= kTanPoleCutoff) throw DomainError("tan evaluated at a pole");
      return {std::sin(a) / c, b / (c * c)};
    }
    case ElementaryKind::pow_const: {
      const double n = fn.exponent;
      const bool integral = std::trunc(n) == n;
      if (a < 0.0 && !integral) throw DomainError("negative base with non-integer exponent");
      if (n == 0.0) return {1.0, 0.0};
      if (a == 0.0 && n < 1.0) throw DomainError("power is not differentiable at zero for exponent below one");
      return {std::pow(a, n), n * std::pow(a, n - 1.0) * b};
    }
  }
  throw DomainError("unknown elementary function");
}

}  // namespace limfree
