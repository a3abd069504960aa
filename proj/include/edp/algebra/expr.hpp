#pragma once

#include <memory>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "edp/algebra/field.hpp"
#include "edp/algebra/integer.hpp"
#include "edp/errors.hpp"

namespace edp {

// Syntax tree of a rational expression over the integers:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' nonneg-integer)?
//   atom   := integer | identifier | '(' expr ')'
struct Expr {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  Int number;
  std::string name;
  unsigned exponent = 0;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;

  static std::shared_ptr<const Expr> num(const Int& v);
  static std::shared_ptr<const Expr> var(std::string n);
  static std::shared_ptr<const Expr> unary(Kind k, std::shared_ptr<const Expr> arg);
  static std::shared_ptr<const Expr> binary(Kind k, std::shared_ptr<const Expr> l,
                                            std::shared_ptr<const Expr> r);
  static std::shared_ptr<const Expr> power(std::shared_ptr<const Expr> base, unsigned e);
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws ParseError with the offending position.
ExprPtr parse_expression(std::string_view text);

std::set<std::string> identifiers(const Expr& e);

// Fully parenthesized rendering that parse_expression reads back.
std::string to_string(const Expr& e);

// Random rational expression in x, y, a, d built from +, -, *, / and small
// powers, as parseable text.
std::string random_expression_text(std::mt19937_64& rng, int depth);

// Direct numeric evaluation. Throws UnboundVariable, or DivisionByZero when a
// divisor evaluates to zero.
template <FieldElement F, class Lookup>
F evaluate_expr(const Expr& e, const Lookup& lookup, const F& like) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return like.from_int(e.number);
    case Expr::Kind::Variable:
      return lookup(e.name);
    case Expr::Kind::Neg:
      return -evaluate_expr<F>(*e.lhs, lookup, like);
    case Expr::Kind::Add:
      return evaluate_expr<F>(*e.lhs, lookup, like) + evaluate_expr<F>(*e.rhs, lookup, like);
    case Expr::Kind::Sub:
      return evaluate_expr<F>(*e.lhs, lookup, like) - evaluate_expr<F>(*e.rhs, lookup, like);
    case Expr::Kind::Mul:
      return evaluate_expr<F>(*e.lhs, lookup, like) * evaluate_expr<F>(*e.rhs, lookup, like);
    case Expr::Kind::Div: {
      F den = evaluate_expr<F>(*e.rhs, lookup, like);
      if (den.is_zero()) throw DivisionByZero("expression divides by zero at this point");
      return evaluate_expr<F>(*e.lhs, lookup, like) / den;
    }
    case Expr::Kind::Pow:
      return power(evaluate_expr<F>(*e.lhs, lookup, like), e.exponent);
  }
  throw Error("unknown expression node");
}

}  // namespace edp
