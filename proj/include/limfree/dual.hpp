#pragma once

/**
 * @file dual.hpp
 * @brief Dual numbers a + b*eps with eps^2 = 0.
 *
 * Evaluating a polynomial at (a + eps) leaves f(a) in the real part and
 * f'(a) in the eps part. The scalar is a template parameter: Rational gives
 * exact pointwise slopes, Polynomial gives the derivative polynomial itself,
 * and double carries the elementary functions.
 */

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "limfree/polynomial.hpp"
#include "limfree/rational.hpp"

namespace limfree {

template <typename T>
concept CommutativeRing = std::regular<T> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

template <CommutativeRing T>
struct Dual {
  T real{};
  T eps{};

  Dual() = default;
  Dual(T r) : real(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Dual(T r, T e) : real(std::move(r)), eps(std::move(e)) {}

  /// a + 1*eps: the seed for differentiating at a.
  static Dual variable(T at) { return Dual(std::move(at), T(1)); }

  Dual operator-() const { return {-real, -eps}; }

  Dual& operator+=(const Dual& o) {
    real = real + o.real;
    eps = eps + o.eps;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    real = real - o.real;
    eps = eps - o.eps;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    // (a + b eps)(c + d eps) = ac + (ad + bc) eps
    T e = real * o.eps + eps * o.real;
    real = real * o.real;
    eps = std::move(e);
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend bool operator==(const Dual&, const Dual&) = default;
};

/// Horner evaluation of `f` in dual arithmetic: (a + b eps) -> f(a) + f'(a) b eps.
template <CommutativeRing T>
  requires std::constructible_from<T, Rational>
Dual<T> evaluate(const Polynomial& f, const Dual<T>& at) {
  Dual<T> acc;
  auto cs = f.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc *= at;
    acc.real = acc.real + T(*it);
  }
  return acc;
}

enum class ElementaryKind { exp, log, sin, cos, tan, pow_const };

struct ElementaryFn {
  ElementaryKind kind;
  double exponent = 0.0;  // used by pow_const only

  /// One of `exp`, `log`, `sin`, `cos`, `tan`; std::nullopt otherwise.
  static std::optional<ElementaryFn> from_name(std::string_view name);
  std::string name() const;
};

/// |cos(a)| at or below this is treated as a pole of tan.
inline constexpr double kTanPoleCutoff = 1e-12;

/// (fn(a), fn'(a) * b). Throws DomainError outside the domain of `fn`.
Dual<double> evaluate(const ElementaryFn& fn, const Dual<double>& at);

}  // namespace limfree
