#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "limfree/rational.hpp"

namespace limfree {

/**
 * Dense univariate polynomial over Rational.
 *
 * Coefficient i multiplies x^i. The leading coefficient is never zero; the
 * zero polynomial is the empty sequence and has no degree (degree() returns
 * std::nullopt rather than a negative number).
 */
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  /// The polynomial x.
  static Polynomial x();
  /// c * x^n.
  static Polynomial monomial(Rational c, std::size_t n);
  /// The linear polynomial x - root.
  static Polynomial linear_factor(const Rational& root);

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero past the end.
  Rational coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(std::int64_t c, Polynomial a) { return a *= Rational(c); }
  friend Polynomial operator*(Polynomial a, std::int64_t c) { return a *= Rational(c); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Horner evaluation.
  Rational operator()(const Rational& at) const;

  /// Canonical text in descending powers, e.g. `x^2 - 5*x + 6`.
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Quotient and remainder with `f = q*g + r`, `r == 0 || deg r < deg g`.
/// Throws DivisionByZero when `g` is the zero polynomial.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g);

/// f(g(x)) by Horner over the polynomial ring.
Polynomial compose(const Polynomial& f, const Polynomial& g);

/// Scales to leading coefficient 1; the zero polynomial stays zero.
Polynomial monic(const Polynomial& f);

/// Monic gcd. Throws std::invalid_argument when both inputs are zero.
Polynomial gcd(Polynomial f, Polynomial g);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// y = k*x + b
struct LinearFunction {
  Rational k;
  Rational b;

  Polynomial as_polynomial() const { return Polynomial{b, k}; }
  friend bool operator==(const LinearFunction&, const LinearFunction&) = default;
};

/**
 * Quotient of polynomials in canonical form: numerator and denominator are
 * coprime and the denominator is monic. Zero is 0/1.
 */
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial p);  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `den` is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_polynomial() const { return den_ == Polynomial(1); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DivisionByZero when `b` is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// Structural equality of canonical forms.
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Throws DivisionByZero at a pole.
  Rational operator()(const Rational& at) const;

  /// `num` when the denominator is 1, otherwise `num/den` with parentheses as needed.
  std::string to_string(std::string_view var = "x") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& base, unsigned exponent);

/// Cross-multiplied comparison a.num*b.den == b.num*a.den.
bool equivalent(const RationalFunction& a, const RationalFunction& b);

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace limfree
