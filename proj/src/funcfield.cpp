#include "edp/funcfield.hpp"

namespace edp {

RelationPtr CurveRelation::edwards_generic() {
  static const RelationPtr rel = [] {
    VarList vars = Variables::of({"a", "d", "y"});
    return std::make_shared<const CurveRelation>(
        CurveRelation{vars, "x", RatFunc::parse("(1 - y^2)/(a - d*y^2)", vars)});
  }();
  return rel;
}

namespace {

RelationPtr fixed_relation(const Int& a, const Int& d, const std::string& root, const std::string& base,
                           bool over_y) {
  VarList vars = Variables::of({base});
  MultiPoly b2 = MultiPoly::variable(vars, base).pow(2);
  MultiPoly one = MultiPoly::constant(vars, Int(1));
  RatFunc square = over_y ? RatFunc(one - b2, one * a - b2 * d) : RatFunc(one - b2 * a, one - b2 * d);
  return std::make_shared<const CurveRelation>(CurveRelation{vars, root, square});
}

}  // namespace

RelationPtr CurveRelation::edwards_over_y(const Int& a, const Int& d, const std::string& root,
                                          const std::string& base) {
  return fixed_relation(a, d, root, base, true);
}

RelationPtr CurveRelation::edwards_over_x(const Int& a, const Int& d, const std::string& root,
                                          const std::string& base) {
  return fixed_relation(a, d, root, base, false);
}

FunctionFieldElement::FunctionFieldElement(RelationPtr rel, RatFunc p, RatFunc q)
    : rel_(std::move(rel)), p_(p.with_variables(rel_->base_vars)), q_(q.with_variables(rel_->base_vars)) {}

FunctionFieldElement FunctionFieldElement::base(const RelationPtr& rel, const RatFunc& p) {
  return FunctionFieldElement(rel, p, RatFunc::constant(rel->base_vars, Int(0)));
}

FunctionFieldElement FunctionFieldElement::root(const RelationPtr& rel) {
  return FunctionFieldElement(rel, RatFunc::constant(rel->base_vars, Int(0)),
                              RatFunc::constant(rel->base_vars, Int(1)));
}

FunctionFieldElement operator+(const FunctionFieldElement& l, const FunctionFieldElement& r) {
  return FunctionFieldElement(l.rel_, l.p_ + r.p_, l.q_ + r.q_);
}

FunctionFieldElement operator-(const FunctionFieldElement& l, const FunctionFieldElement& r) {
  return FunctionFieldElement(l.rel_, l.p_ - r.p_, l.q_ - r.q_);
}

FunctionFieldElement operator*(const FunctionFieldElement& l, const FunctionFieldElement& r) {
  RatFunc p = l.p_ * r.p_;
  if (!l.q_.is_zero() && !r.q_.is_zero()) p = p + l.rel_->square * l.q_ * r.q_;
  return FunctionFieldElement(l.rel_, std::move(p), l.p_ * r.q_ + l.q_ * r.p_);
}

FunctionFieldElement FunctionFieldElement::inverse() const {
  RatFunc norm = p_ * p_ - rel_->square * q_ * q_;
  if (norm.is_zero()) throw DegenerateDenominator("denominator vanishes identically on the curve");
  return FunctionFieldElement(rel_, p_ / norm, -q_ / norm);
}

FunctionFieldElement operator/(const FunctionFieldElement& l, const FunctionFieldElement& r) {
  if (r.q_.is_zero()) {
    if (r.p_.is_zero()) throw DegenerateDenominator("denominator vanishes identically on the curve");
    return FunctionFieldElement(l.rel_, l.p_ / r.p_, l.q_ / r.p_);
  }
  return l * r.inverse();
}

FunctionFieldElement FunctionFieldElement::operator-() const { return FunctionFieldElement(rel_, -p_, -q_); }

FunctionFieldElement FunctionFieldElement::from_int(const Int& v) const {
  return base(rel_, RatFunc::constant(rel_->base_vars, v));
}

std::string FunctionFieldElement::to_string() const {
  if (q_.is_zero()) return p_.to_string();
  std::string root_part = rel_->root + "*(" + q_.to_string() + ")";
  if (p_.is_zero()) return root_part;
  return "(" + p_.to_string() + ") + " + root_part;
}

std::string UniqueForm::to_string() const {
  return "p = " + p.to_string() + "\n" + (mode == FormMode::XForm ? "q = " : "q' = ") + q.to_string();
}

UniqueForm to_unique_form(const RatFunc& g, FormMode mode, const RelationPtr& rel) {
  std::vector<std::string> names = rel->base_vars->names();
  names.push_back(rel->root);
  const VarList all = Variables::of(names);
  const std::size_t root = names.size() - 1;
  RatFunc h = g.with_variables(all);

  // c_0 + c_1 r + c_2 r^2 + ... = sum c_{2k} s^k + r sum c_{2k+1} s^k, s = r^2.
  auto reduce = [&](const MultiPoly& f) {
    RatFunc even = RatFunc::constant(rel->base_vars, Int(0));
    RatFunc odd = even;
    RatFunc s_power = RatFunc::constant(rel->base_vars, Int(1));
    std::vector<MultiPoly> c = f.coefficients_in(root);
    for (std::size_t k = 0; k < c.size(); k += 2) {
      even = even + RatFunc(c[k]).with_variables(rel->base_vars) * s_power;
      if (k + 1 < c.size()) odd = odd + RatFunc(c[k + 1]).with_variables(rel->base_vars) * s_power;
      s_power = s_power * rel->square;
    }
    return FunctionFieldElement(rel, even, odd);
  };
  FunctionFieldElement num = reduce(h.num());
  FunctionFieldElement den = reduce(h.den());
  FunctionFieldElement value = num / den;
  UniqueForm u{value.p(), value.q(), FormMode::XForm};
  return mode == FormMode::XForm ? u : mode_convert(u, rel);
}

UniqueForm mode_convert(const UniqueForm& u, const RelationPtr& rel) {
  if (u.mode == FormMode::XForm) return UniqueForm{u.p, u.q * rel->square, FormMode::InverseXForm};
  return UniqueForm{u.p, u.q / rel->square, FormMode::XForm};
}

Fp evaluate_form(const UniqueForm& u, const std::map<std::string, Fp>& bindings, const RelationPtr& rel) {
  auto it = bindings.find(rel->root);
  if (it == bindings.end()) throw UnboundVariable("no value for " + rel->root);
  const Fp& r = it->second;
  Fp p = u.p.evaluate(bindings);
  if (u.q.is_zero()) return p;
  Fp q = u.q.evaluate(bindings);
  if (u.mode == FormMode::XForm) return p + r * q;
  if (r.is_zero()) throw DivisionByZero(rel->root + " is zero in the inverse form");
  return p + q / r;
}

}  // namespace edp
