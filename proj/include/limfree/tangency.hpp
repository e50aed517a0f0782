#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "limfree/polynomial.hpp"
#include "limfree/rational.hpp"

namespace limfree {

/// f rewritten in powers of t = x - center: f(center + t) = sum coeffs[i] t^i.
struct LocalExpansion {
  Rational center;
  std::vector<Rational> coeffs;

  /// The expansion as a polynomial in t.
  Polynomial in_shift_variable() const { return Polynomial(coeffs); }
  friend bool operator==(const LocalExpansion&, const LocalExpansion&) = default;
};

/// Root multiplicity, or infinite when the tested polynomial vanishes identically.
class Multiplicity {
 public:
  static Multiplicity finite(std::size_t m) { return Multiplicity(m); }
  static Multiplicity infinite() { return Multiplicity(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  std::size_t value() const { return *value_; }
  bool at_least(std::size_t m) const { return is_infinite() || *value_ >= m; }
  /// Decimal count or `INFINITE`.
  std::string to_string() const;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  explicit Multiplicity(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/**
 * Tangent line at p with its divisibility certificate:
 *
 *   f(x) - (k*x + b) = (x - p)^2 * cofactor(x)
 *
 * The cofactor is held in the x basis so the identity is a direct polynomial check.
 */
struct TangentLine {
  Rational p;
  Rational k;
  Rational b;
  Polynomial cofactor;

  LinearFunction line() const { return {k, b}; }
  /// True iff (x - p)^2 * cofactor + k*x + b equals f exactly.
  bool certifies(const Polynomial& f) const;
};

/// Coefficients of f(p + t) by repeated synthetic division by (x - p).
LocalExpansion taylor_shift(const Polynomial& f, const Rational& p);

/// Largest m with (x - p)^m dividing f - line, or infinite if the difference is zero.
Multiplicity intersection_multiplicity(const Polynomial& f, const LinearFunction& line, const Rational& p);

/// Double-root criterion: multiplicity at least two (a coincident line counts).
bool check_tangency(const Polynomial& f, const LinearFunction& line, const Rational& p);

/// The unique tangent at p. The certificate is re-verified before returning;
/// a failure throws InvariantViolation.
TangentLine tangent_at(const Polynomial& f, const Rational& p);

/// Derivative polynomial: the eps part of f evaluated at (x + eps) over Polynomial.
Polynomial derive_poly(const Polynomial& f);

/// Derivative of a rational function, in canonical form.
RationalFunction derive_ratfun(const RationalFunction& r);

}  // namespace limfree
