#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace limfree {

/**
 * Exact rational number backed by GMP.
 *
 * Always held in canonical form: the denominator is strictly positive and
 * coprime to the numerator, so zero is 0/1 and equality is structural.
 */
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  explicit Rational(mpz_class n);
  /// Throws DivisionByZero when `d == 0`.
  Rational(mpz_class n, mpz_class d);
  Rational(std::int64_t n, std::int64_t d);

  /// Accepts `n`, `-n`, `n/d` and decimal `a.b` (converted exactly).
  /// Throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DivisionByZero when `o` is zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// Nearest representable double (round-to-nearest-even).
  double to_double() const;
  /// Canonical text: `n`, `-n` or `n/d`.
  std::string to_string() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal(int significant_digits = 12) const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace limfree
