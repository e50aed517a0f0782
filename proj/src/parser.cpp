#include "limfree/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "limfree/error.hpp"

namespace limfree {

namespace {

enum class Tok { number, variable, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      bool seen_dot = false;
      while (i < in.size() && (std::isdigit(static_cast<unsigned char>(in[i])) || in[i] == '.')) {
        if (in[i] == '.') {
          if (seen_dot) throw ParseError(i, "malformed number");
          seen_dot = true;
        }
        ++i;
      }
      if (in.substr(start, i - start) == ".") throw ParseError(start, "malformed number");
      out.push_back({Tok::number, start, in.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < in.size() && is_ident_char(in[i])) ++i;
      auto name = in.substr(start, i - start);
      if (name != "x") throw ParseError(start, "unknown variable '" + std::string(name) + "'; only x is allowed");
      out.push_back({Tok::variable, start, name});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+':
        kind = Tok::plus;
        break;
      case '-':
        kind = Tok::minus;
        break;
      case '*':
        kind = Tok::star;
        break;
      case '/':
        kind = Tok::slash;
        break;
      case '^':
        kind = Tok::caret;
        break;
      case '(':
        kind = Tok::lparen;
        break;
      case ')':
        kind = Tok::rparen;
        break;
      default:
        throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, start, in.substr(start, 1)});
    ++i;
  }
  out.push_back({Tok::end, in.size(), {}});
  return out;
}

ExprPtr make(std::size_t pos, auto node) {
  auto e = std::make_shared<Expr>();
  e->node = std::move(node);
  e->position = pos;
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse_all() {
    auto e = expr();
    if (peek().kind == Tok::rparen) throw ParseError(peek().pos, "unbalanced parenthesis: unexpected ')'");
    if (peek().kind != Tok::end) throw ParseError(peek().pos, "unexpected '" + std::string(peek().text) + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& take() { return toks_[idx_++]; }

  ExprPtr expr() {
    auto lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = take();
      auto rhs = term();
      lhs = make(op.pos, ast::Binary{op.kind == Tok::plus ? ast::BinaryOp::add : ast::BinaryOp::sub, lhs, rhs});
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = unary();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::star || t.kind == Tok::slash) {
        take();
        auto rhs = unary();
        lhs = make(t.pos, ast::Binary{t.kind == Tok::star ? ast::BinaryOp::mul : ast::BinaryOp::div, lhs, rhs});
      } else if (t.kind == Tok::variable || t.kind == Tok::lparen) {
        auto rhs = unary();
        lhs = make(t.pos, ast::Binary{ast::BinaryOp::mul, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (peek().kind == Tok::minus) {
      const Token& t = take();
      return make(t.pos, ast::Neg{unary()});
    }
    return power();
  }

  ExprPtr power() {
    auto base = atom();
    if (peek().kind != Tok::caret) return base;
    const Token& caret = take();
    return make(caret.pos, ast::Pow{base, exponent()});
  }

  unsigned exponent() {
    bool parenthesized = false;
    if (peek().kind == Tok::lparen) {
      take();
      parenthesized = true;
    }
    const Token& t = peek();
    if (t.kind == Tok::minus) throw ParseError(t.pos, "negative exponent");
    if (t.kind != Tok::number) throw ParseError(t.pos, "exponent must be a non-negative integer literal");
    if (t.text.find('.') != std::string_view::npos) {
      throw ParseError(t.pos, "exponent must be a non-negative integer literal");
    }
    take();
    const unsigned value = checked_exponent(mpz_class(std::string(t.text)), t.pos);
    if (parenthesized) {
      if (peek().kind != Tok::rparen) throw ParseError(peek().pos, "unbalanced parenthesis: expected ')'");
      take();
    }
    if (peek().kind == Tok::caret) {
      // Right-associative: a^b^c = a^(b^c), folded on the integer literals.
      const Token& caret = take();
      const unsigned inner = exponent();
      mpz_class folded;
      mpz_pow_ui(folded.get_mpz_t(), mpz_class(value).get_mpz_t(), std::min(inner, 64U));
      if (inner > 64 && value > 1) folded = kMaxExponent + 1;
      return checked_exponent(folded, caret.pos);
    }
    return value;
  }

  static unsigned checked_exponent(const mpz_class& v, std::size_t pos) {
    if (v > kMaxExponent) throw ParseError(pos, "exponent exceeds " + std::to_string(kMaxExponent));
    return static_cast<unsigned>(v.get_ui());
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        return make(t.pos, ast::Number{Rational::parse(t.text)});
      }
      case Tok::variable:
        take();
        return make(t.pos, ast::Variable{});
      case Tok::lparen: {
        take();
        auto inner = expr();
        if (peek().kind != Tok::rparen) throw ParseError(peek().pos, "unbalanced parenthesis: expected ')'");
        take();
        return inner;
      }
      case Tok::rparen:
        throw ParseError(t.pos, "unbalanced parenthesis: unexpected ')'");
      case Tok::end:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + std::string(t.text) + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

Polynomial lower_poly_impl(const Expr& e) {
  return std::visit(
      overloaded{
          [](const ast::Number& n) { return Polynomial(n.value); },
          [](const ast::Variable&) { return Polynomial::x(); },
          [](const ast::Neg& n) { return -lower_poly_impl(*n.operand); },
          [&](const ast::Binary& b) {
            Polynomial lhs = lower_poly_impl(*b.lhs);
            Polynomial rhs = lower_poly_impl(*b.rhs);
            switch (b.op) {
              case ast::BinaryOp::add:
                return lhs + rhs;
              case ast::BinaryOp::sub:
                return lhs - rhs;
              case ast::BinaryOp::mul:
                return lhs * rhs;
              case ast::BinaryOp::div:
                if (!rhs.is_constant()) {
                  throw LoweringError(e.position, "x appears in a denominator; not a polynomial");
                }
                if (rhs.is_zero()) throw LoweringError(e.position, "division by zero");
                return lhs * (Rational(1) / rhs.leading());
            }
            return Polynomial();
          },
          [](const ast::Pow& p) { return pow(lower_poly_impl(*p.base), p.exponent); },
      },
      e.node);
}

RationalFunction lower_ratfun_impl(const Expr& e) {
  return std::visit(
      overloaded{
          [](const ast::Number& n) { return RationalFunction(Polynomial(n.value)); },
          [](const ast::Variable&) { return RationalFunction(Polynomial::x()); },
          [](const ast::Neg& n) { return -lower_ratfun_impl(*n.operand); },
          [&](const ast::Binary& b) {
            RationalFunction lhs = lower_ratfun_impl(*b.lhs);
            RationalFunction rhs = lower_ratfun_impl(*b.rhs);
            switch (b.op) {
              case ast::BinaryOp::add:
                return lhs + rhs;
              case ast::BinaryOp::sub:
                return lhs - rhs;
              case ast::BinaryOp::mul:
                return lhs * rhs;
              case ast::BinaryOp::div:
                if (rhs.num().is_zero()) throw LoweringError(e.position, "division by zero");
                return lhs / rhs;
            }
            return RationalFunction();
          },
          [](const ast::Pow& p) { return pow(lower_ratfun_impl(*p.base), p.exponent); },
      },
      e.node);
}

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(lex(input)).parse_all(); }

Polynomial lower_poly(const Expr& e) { return lower_poly_impl(e); }

RationalFunction lower_ratfun(const Expr& e) { return lower_ratfun_impl(e); }

std::string render(const Polynomial& f) { return f.to_string(); }

std::string render(const RationalFunction& r) { return r.to_string(); }

}  // namespace limfree
