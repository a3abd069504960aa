#include "edp/algebra/expr.hpp"

#include <cctype>
#include <limits>

namespace edp {

ExprPtr Expr::num(const Int& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = v;
  return e;
}

ExprPtr Expr::var(std::string n) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  e->name = std::move(n);
  return e;
}

ExprPtr Expr::unary(Kind k, ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(arg);
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::power(ExprPtr base, unsigned exp) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exp;
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+')) {
        e = Expr::binary(Expr::Kind::Add, e, term());
      } else if (accept('-')) {
        e = Expr::binary(Expr::Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (accept('*')) {
        e = Expr::binary(Expr::Kind::Mul, e, unary());
      } else if (accept('/')) {
        e = Expr::binary(Expr::Kind::Div, e, unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) return Expr::unary(Expr::Kind::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      Int e = parse_int(text_.substr(start, pos_ - start));
      if (e > std::numeric_limits<unsigned>::max() / 2) fail("exponent too large");
      return Expr::power(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  ExprPtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::num(parse_int(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Expr::var(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Variable) out.insert(e.name);
  if (e.lhs) collect(*e.lhs, out);
  if (e.rhs) collect(*e.rhs, out);
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::set<std::string> identifiers(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number < 0 ? "(" + e.number.get_str() + ")" : e.number.get_str();
    case Expr::Kind::Variable:
      return e.name;
    case Expr::Kind::Neg:
      return "(-" + to_string(*e.lhs) + ")";
    case Expr::Kind::Add:
      return "(" + to_string(*e.lhs) + " + " + to_string(*e.rhs) + ")";
    case Expr::Kind::Sub:
      return "(" + to_string(*e.lhs) + " - " + to_string(*e.rhs) + ")";
    case Expr::Kind::Mul:
      return to_string(*e.lhs) + "*" + to_string(*e.rhs);
    case Expr::Kind::Div:
      return "(" + to_string(*e.lhs) + ")/(" + to_string(*e.rhs) + ")";
    case Expr::Kind::Pow:
      return "(" + to_string(*e.lhs) + ")^" + std::to_string(e.exponent);
  }
  return {};
}

std::string random_expression_text(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (depth == 0 || pick(rng) < 2) {
    static const char* leaves[] = {"x", "y", "x", "y", "a", "d", "1", "2", "3", "-1"};
    return leaves[pick(rng)];
  }
  const int op = pick(rng);
  std::string lhs = random_expression_text(rng, depth - 1);
  if (op == 9) return "(" + lhs + ")^" + std::to_string(2 + rng() % 2);
  std::string rhs = random_expression_text(rng, depth - 1);
  static const char ops[] = {'+', '-', '*', '*', '/', '/', '+', '-', '*'};
  return "(" + lhs + " " + ops[op] + " " + rhs + ")";
}

}  // namespace edp
