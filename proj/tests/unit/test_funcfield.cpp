#include <doctest.h>

#include <random>

#include "edp/algebra/expr.hpp"
#include "edp/curves/prime_curves.hpp"
#include "edp/funcfield.hpp"
#include "support.hpp"

using namespace edp;

namespace {

const VarList& xy_vars() {
  static const VarList vars = Variables::of({"a", "d", "y", "x"});
  return vars;
}

RatFunc G(const char* text) { return RatFunc::parse(text, xy_vars()); }
RatFunc B(const char* text) { return RatFunc::parse(text, CurveRelation::edwards_generic()->base_vars); }

std::map<std::string, Fp> bind(const FpCurve& c, const FpPoint& p) {
  return {{"a", c.a()}, {"d", c.d()}, {"x", p.x}, {"y", p.y}};
}

}  // namespace

TEST_CASE("unique form examples") {
  UniqueForm x2 = to_unique_form(G("x^2"));
  CHECK(x2.p == B("(1 - y^2)/(a - d*y^2)"));
  CHECK(x2.q.is_zero());
  UniqueForm x = to_unique_form(G("x"));
  CHECK(x.p.is_zero());
  CHECK(x.q == B("1"));
  UniqueForm psi2 = to_unique_form(G("(a - d)*(1 + y)/(2*x*(1 - y))"), FormMode::InverseXForm);
  CHECK(psi2.p.is_zero());
  CHECK(psi2.q == B("(a - d)*(1 + y)/(2*(1 - y))"));
  CHECK(psi2.mode == FormMode::InverseXForm);
  CHECK_THROWS_AS(to_unique_form(G("1/(a*x^2 + y^2 - 1 - d*x^2*y^2)")), DegenerateDenominator);
}

TEST_CASE("unique form of psi_2 agrees at curve points") {
  std::mt19937_64 rng(41);
  auto field = PrimeField::create(Int(10007));
  UniqueForm u = to_unique_form(G("(a - d)*(1 + y)/(2*x*(1 - y))"), FormMode::InverseXForm);
  int checked = 0;
  while (checked < 200) {
    FpCurve c = random_curve(field, rng);
    FpPoint p = random_point(c, rng);
    if (p.x.is_zero()) continue;
    Fp direct = (c.a() - c.d()) * (c.one() + p.y) / (from_int(c.one(), 2) * p.x * (c.one() - p.y));
    CHECK(evaluate_form(u, bind(c, p)) == direct);
    ++checked;
  }
}

TEST_CASE("mode conversion") {
  UniqueForm zero{B("y"), B("0"), FormMode::XForm};
  UniqueForm zc = mode_convert(zero);
  CHECK(zc.q.is_zero());
  CHECK(zc.mode == FormMode::InverseXForm);
  UniqueForm one{B("0"), B("1"), FormMode::XForm};
  UniqueForm oc = mode_convert(one);
  CHECK(oc.q == B("(1 - y^2)/(a - d*y^2)"));
  CHECK(mode_convert(oc) == one);
  std::mt19937_64 rng(42);
  int converted = 0;
  while (converted < 20) {
    try {
      UniqueForm u = to_unique_form(RatFunc::parse(testing::random_expression(rng, 3), xy_vars()));
      CHECK(mode_convert(mode_convert(u)) == u);
      ++converted;
    } catch (const ZeroDenominator&) {
    } catch (const DegenerateDenominator&) {
    }
  }
}

TEST_CASE("unique forms of random expressions are sound, canonical and idempotent") {
  std::mt19937_64 rng(43);
  auto field = PrimeField::create(Int(1000003));
  int expressions = 0;
  while (expressions < 60) {
    std::string text = testing::random_expression(rng, 3);
    ExprPtr e = parse_expression(text);
    UniqueForm u{B("0"), B("0")};
    try {
      u = to_unique_form(RatFunc::from_expr(*e, xy_vars()));
    } catch (const ZeroDenominator&) {
      continue;
    } catch (const DegenerateDenominator&) {
      continue;
    }
    ++expressions;
    CAPTURE(text);
    UniqueForm inv = to_unique_form(RatFunc::from_expr(*e, xy_vars()), FormMode::InverseXForm);
    // Idempotence: p + x q fed back in gives the same pair.
    RatFunc x = G("x");
    RatFunc again = u.p.with_variables(xy_vars()) + x * u.q.with_variables(xy_vars());
    CHECK(to_unique_form(again) == u);
    int agreed = 0;
    for (int k = 0; k < 20; ++k) {
      FpCurve c = random_curve(field, rng);
      FpPoint p = random_point(c, rng);
      auto values = bind(c, p);
      try {
        Fp direct = evaluate_expr<Fp>(*e, [&](const std::string& n) { return values.at(n); }, p.x);
        CHECK(evaluate_form(u, values) == direct);
        CHECK(evaluate_form(inv, values) == direct);
        ++agreed;
      } catch (const DivisionByZero&) {
      }
    }
    CHECK(agreed >= 15);
  }
}

TEST_CASE("different expressions of the same function share a form") {
  // x^3 and x(1 - y^2)/(a - d y^2) agree on the curve.
  CHECK(to_unique_form(G("x^3")) == to_unique_form(G("x*(1 - y^2)/(a - d*y^2)")));
  CHECK(to_unique_form(G("a*x^2 + y^2")) == to_unique_form(G("1 + d*x^2*y^2")));
  CHECK(to_unique_form(G("1/x")) == to_unique_form(G("x*(a - d*y^2)/(1 - y^2)")));
}

TEST_CASE("function field arithmetic on the Gauss curve") {
  RelationPtr over_c = CurveRelation::edwards_over_y(Int(1), Int(-1), "s", "c");
  using FF = FunctionFieldElement;
  FF s = FF::root(over_c);
  FF c = FF::base(over_c, RatFunc::parse("c", over_c->base_vars));
  // s^2 + c^2 + s^2 c^2 = 1 on the curve.
  CHECK(s * s + c * c + s * s * c * c == s.from_int(Int(1)));
  CHECK((s / c) * c == s);
  CHECK(s.inverse() * s == s.from_int(Int(1)));
  CHECK_THROWS_AS((s - s).inverse(), DegenerateDenominator);
}
