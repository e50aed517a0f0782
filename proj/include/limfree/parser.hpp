#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "limfree/polynomial.hpp"
#include "limfree/rational.hpp"

namespace limfree {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace ast {

struct Number {
  Rational value;
};
struct Variable {};
struct Neg {
  ExprPtr operand;
};
enum class BinaryOp { add, sub, mul, div };
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Pow {
  ExprPtr base;
  unsigned exponent;
};

}  // namespace ast

/// Expression tree over the single variable x. `position` is the byte offset
/// of the token that produced the node.
struct Expr {
  std::variant<ast::Number, ast::Variable, ast::Neg, ast::Binary, ast::Pow> node;
  std::size_t position = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LoweringError : public std::runtime_error {
 public:
  LoweringError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Largest exponent literal the parser accepts.
inline constexpr unsigned kMaxExponent = 4096;

/**
 * Parses an expression. Grammar, loosest to tightest:
 *
 *   expr   := term (("+" | "-") term)*
 *   term   := unary (("*" | "/") unary | implicit)*
 *   unary  := "-" unary | power
 *   power  := atom ("^" exponent)?
 *   atom   := number | "x" | "(" expr ")"
 *
 * `implicit` is juxtaposition before `x` or `(` ("2x", "3(x+1)"). Exponents are
 * non-negative integer literals, optionally parenthesized, right-associative.
 * Throws ParseError.
 */
ExprPtr parse(std::string_view input);

/// Throws LoweringError if x occurs in a denominator.
Polynomial lower_poly(const Expr& e);
/// Throws LoweringError if a denominator lowers to zero.
RationalFunction lower_ratfun(const Expr& e);

/// Canonical text; parsing and lowering it reproduces `f`.
std::string render(const Polynomial& f);
std::string render(const RationalFunction& r);

}  // namespace limfree
