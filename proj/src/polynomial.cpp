#include "limfree/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "limfree/error.hpp"

namespace limfree {

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::x() { return Polynomial{Rational(0), Rational(1)}; }

Polynomial Polynomial::monomial(Rational c, std::size_t n) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(n + 1);
  v[n] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial{-root, Rational(1)}; }

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) {
      out += mag.to_string();
      out += '*';
    }
    out += var;
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  const std::size_t dg = *g.degree();
  if (f.is_zero() || *f.degree() < dg) return {Polynomial(), f};

  std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Rational> quot(rem.size() - dg);
  const Rational lead = g.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational factor = rem[i + dg] / lead;
    if (!factor.is_zero()) {
      for (std::size_t j = 0; j <= dg; ++j) rem[i + j] -= factor * g.coeff(j);
    }
    quot[i] = std::move(factor);
  }
  rem.resize(dg);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial compose(const Polynomial& f, const Polynomial& g) {
  Polynomial acc;
  auto cs = f.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc *= g;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * (Rational(1) / f.leading());
}

Polynomial gcd(Polynomial f, Polynomial g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  while (!g.is_zero()) {
    auto r = divrem(f, g).second;
    f = std::move(g);
    g = monic(r);
  }
  return monic(f);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// --- RationalFunction -------------------------------------------------------

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial common = gcd(num, den);
  num = divrem(num, common).first;
  den = divrem(den, common).first;
  const Rational scale = Rational(1) / den.leading();
  num_ = num * scale;
  den_ = den * scale;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational RationalFunction::operator()(const Rational& at) const {
  Rational d = den_(at);
  if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
  return num_(at) / d;
}

namespace {

std::size_t term_count(const Polynomial& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coefficients().begin(), p.coefficients().end(), [](const Rational& c) { return !c.is_zero(); }));
}

}  // namespace

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  if (term_count(num_) > 1) n = "(" + n + ")";
  // A monic monomial denominator renders as a bare power of the variable.
  if (term_count(den_) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
  return {pow(base.num(), exponent), pow(base.den(), exponent)};
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

}  // namespace limfree
