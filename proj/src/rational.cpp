#include "limfree/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "limfree/error.hpp"

namespace limfree {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_digits(std::string_view s) { return mpz_class(std::string(s), 10); }

}  // namespace

Rational::Rational(std::int64_t n) : value_(mpz_class(static_cast<long>(n))) {}

Rational::Rational(mpz_class n) : value_(std::move(n)) {}

Rational::Rational(mpz_class n, mpz_class d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(std::move(n), std::move(d));
  value_.canonicalize();
}

Rational::Rational(std::int64_t n, std::int64_t d)
    : Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))) {}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    out = Rational(parse_digits(num), parse_digits(den));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : parse_digits(whole);
    mpz_class f = frac.empty() ? mpz_class(0) : parse_digits(frac);
    out = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    out = Rational(parse_digits(s));
  }
  return negative ? -out : out;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

double Rational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(int significant_digits) const {
  mpfr_t tmp;
  // Enough working precision that the final rounding to `significant_digits` is the only one.
  mpfr_init2(tmp, 64 + significant_digits * 4);
  mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
  int n = mpfr_snprintf(nullptr, 0, "%.*Rg", significant_digits, tmp);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, tmp);
  mpfr_clear(tmp);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace limfree
