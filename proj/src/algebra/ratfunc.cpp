#include "edp/algebra/ratfunc.hpp"

#include <algorithm>
#include <set>

namespace edp {

namespace {

bool is_one(const MultiPoly& p) { return p.is_constant() && p.constant_term() == 1; }

// Homogenized numerator sum_e c_e * p^e * q^(top - e).
MultiPoly compose(const std::vector<MultiPoly>& coeffs, const MultiPoly& p, const MultiPoly& q,
                  std::size_t top) {
  MultiPoly acc(merge_variables(p.vars(), q.vars()));
  std::vector<MultiPoly> qpow{MultiPoly::constant(acc.vars(), Int(1))};
  for (std::size_t e = 1; e <= top; ++e) qpow.push_back(qpow.back() * q);
  MultiPoly ppow = MultiPoly::constant(acc.vars(), Int(1));
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (!coeffs[e].is_zero()) acc += coeffs[e] * ppow * qpow[top - e];
    if (e + 1 < coeffs.size()) ppow = ppow * p;
  }
  return acc;
}

}  // namespace

RatFunc::RatFunc() : num_(), den_(MultiPoly::constant(num_.vars(), Int(1))) {}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), Int(1))) {}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  VarList vars = merge_variables(num.vars(), den.vars());
  MultiPoly n = num.with_variables(vars);
  MultiPoly d = den.with_variables(vars);
  if (n.is_zero()) {
    num_ = n;
    den_ = MultiPoly::constant(vars, Int(1));
    return;
  }
  if (!is_one(d)) {
    MultiPoly g = gcd(n, d);
    if (!is_one(g)) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
  }
  if (d.leading_term().coeff < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFunc RatFunc::constant(const VarList& vars, const Int& num, const Int& den) {
  return RatFunc(MultiPoly::constant(vars, num), MultiPoly::constant(vars, den));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& lhs, const RatFunc& rhs) {
  if (lhs.is_zero()) return rhs.with_variables(merge_variables(lhs.vars(), rhs.vars()));
  if (rhs.is_zero()) return lhs.with_variables(merge_variables(lhs.vars(), rhs.vars()));
  if (lhs.den_ == rhs.den_) return RatFunc(lhs.num_ + rhs.num_, lhs.den_);
  return RatFunc(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

RatFunc operator-(const RatFunc& lhs, const RatFunc& rhs) { return lhs + (-rhs); }

RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) {
    return RatFunc(MultiPoly(merge_variables(lhs.vars(), rhs.vars())));
  }
  // Cross-cancel so the product of reduced factors is already reduced.
  MultiPoly g1 = gcd(lhs.num_, rhs.den_);
  MultiPoly g2 = gcd(rhs.num_, lhs.den_);
  MultiPoly n = exact_div(lhs.num_, g1) * exact_div(rhs.num_, g2);
  MultiPoly d = exact_div(lhs.den_, g2) * exact_div(rhs.den_, g1);
  if (d.leading_term().coeff < 0) {
    n = -n;
    d = -d;
  }
  VarList vars = merge_variables(n.vars(), d.vars());
  return RatFunc(n.with_variables(vars), d.with_variables(vars), RatFunc::Reduced{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of the zero rational function");
  MultiPoly n = den_;
  MultiPoly d = num_;
  if (d.leading_term().coeff < 0) {
    n = -n;
    d = -d;
  }
  return RatFunc(std::move(n), std::move(d), Reduced{});
}

RatFunc operator/(const RatFunc& lhs, const RatFunc& rhs) { return lhs * rhs.inverse(); }

RatFunc RatFunc::pow(unsigned exponent) const {
  // Powers of coprime polynomials stay coprime.
  MultiPoly n = num_.pow(exponent);
  MultiPoly d = den_.pow(exponent);
  if (d.leading_term().coeff < 0) {
    n = -n;
    d = -d;
  }
  return RatFunc(std::move(n), std::move(d), Reduced{});
}

RatFunc RatFunc::substitute(std::size_t var, const RatFunc& value) const {
  std::vector<MultiPoly> nc = num_.coefficients_in(var);
  std::vector<MultiPoly> dc = den_.coefficients_in(var);
  const std::size_t top = std::max(nc.size(), dc.size()) - 1;
  MultiPoly n = compose(nc, value.num(), value.den(), top);
  MultiPoly d = compose(dc, value.num(), value.den(), top);
  return RatFunc(n, d);
}

RatFunc RatFunc::with_variables(const VarList& vars) const {
  return RatFunc(num_.with_variables(vars), den_.with_variables(vars), Reduced{});
}

Fp RatFunc::evaluate(const std::map<std::string, Fp>& bindings) const {
  Fp d = den_.evaluate(bindings);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes at this point");
  return num_.evaluate(bindings) / d;
}

std::string RatFunc::to_string() const {
  if (is_one(den_)) return num_.to_string();
  auto wrap = [](const MultiPoly& p) {
    return p.size() == 1 && p.leading_term().coeff > 0 ? p.to_string() : "(" + p.to_string() + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RatFunc RatFunc::from_expr(const Expr& e, const VarList& vars) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return constant(vars, e.number);
    case Expr::Kind::Variable:
      return RatFunc(MultiPoly::variable(vars, e.name));
    case Expr::Kind::Neg:
      return -from_expr(*e.lhs, vars);
    case Expr::Kind::Add:
      return from_expr(*e.lhs, vars) + from_expr(*e.rhs, vars);
    case Expr::Kind::Sub:
      return from_expr(*e.lhs, vars) - from_expr(*e.rhs, vars);
    case Expr::Kind::Mul:
      return from_expr(*e.lhs, vars) * from_expr(*e.rhs, vars);
    case Expr::Kind::Div:
      return from_expr(*e.lhs, vars) / from_expr(*e.rhs, vars);
    case Expr::Kind::Pow:
      return from_expr(*e.lhs, vars).pow(e.exponent);
  }
  throw Error("unknown expression node");
}

RatFunc RatFunc::parse(std::string_view text, const VarList& vars) {
  ExprPtr e = parse_expression(text);
  VarList list = vars;
  std::set<std::string> ids = identifiers(*e);
  if (!list) {
    list = Variables::of(std::vector<std::string>(ids.begin(), ids.end()));
  } else {
    for (const std::string& id : ids) {
      if (!list->index_of(id)) throw ParseError("unknown variable '" + id + "'");
    }
  }
  return from_expr(*e, list);
}

nlohmann::json RatFunc::to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

RatFunc RatFunc::from_json(const nlohmann::json& j, const VarList& vars) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("rational function JSON needs 'num' and 'den'");
  }
  MultiPoly n = MultiPoly::from_json(j.at("num"), vars);
  MultiPoly d = MultiPoly::from_json(j.at("den"), vars);
  return RatFunc(n, d);
}

RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den) { return RatFunc(num, den); }

}  // namespace edp
