#include "edp/app/gauss.hpp"

#include <gmpxx.h>

#include <sstream>

#include "edp/curves/edwards.hpp"
#include "edp/edivpoly.hpp"
#include "edp/funcfield.hpp"

namespace edp {

namespace {

using FF = FunctionFieldElement;
using FFCurve = EdwardsCurve<FF>;
using FFPoint = EdwardsPoint<FF>;

// psi~_n on the Gauss curve (a = 1, d = -1) as a polynomial in `name`.
MultiPoly gauss_core(unsigned n, const std::string& name) {
  const VarList& v = psi_tilde_variables();
  MultiPoly f = psi_tilde(n)
                    .substitute(v->index_of("a").value(), MultiPoly::constant(v, Int(1)))
                    .substitute(v->index_of("d").value(), MultiPoly::constant(v, Int(-1)));
  return f.rename({{"y", name}}).with_variables(Variables::of({name}));
}

// psi_n(s, c) = (a-d)^k psi~_n(c) / (s^gamma (2(1-c))^m) with a - d = 2.
FF gauss_psi(const RelationPtr& rel, unsigned n) {
  const VarList& vars = rel->base_vars;
  MultiPoly one_minus = MultiPoly::constant(vars, Int(1)) - MultiPoly::variable(vars, vars->name(0));
  MultiPoly den = (one_minus * Int(2)).pow(static_cast<unsigned>(m_of(n)));
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k_of(n));
  FF value = FF::base(rel, RatFunc(gauss_core(n, vars->name(0)) * scale, den));
  return gamma_of(n) == 1 ? value / FF::root(rel) : value;
}

FFPoint divpoly_multiple(const RelationPtr& rel, unsigned n) {
  FF c = FF::base(rel, RatFunc(MultiPoly::variable(rel->base_vars, rel->base_vars->name(0))));
  FF one = c.from_int(Int(1));
  FF two = c.from_int(Int(2));
  FF psi = gauss_psi(rel, n);
  FF psi2 = psi * psi;
  FF phi = (one + c) * psi2 / (one - c) - c.from_int(Int(4)) * gauss_psi(rel, n - 1) * gauss_psi(rel, n + 1) / two;
  FF omega = two * gauss_psi(rel, 2 * n) / (two * psi);
  return FFPoint{phi * psi / omega, (phi - psi2) / (phi + psi2)};
}

std::vector<Int> coefficient_list(const MultiPoly& f) {
  std::vector<Int> out;
  for (const MultiPoly& c : f.coefficients_in(0)) out.push_back(c.constant_term());
  return out;
}

std::string join(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + edp::to_string(v[i]);
  return s + "]";
}

// Expresses p(c) + s q(c) in the form p'(s) + c q'(s).
UniqueForm over_s(const FF& value) {
  RelationPtr rel_s = CurveRelation::edwards_over_x(Int(1), Int(-1), "c", "s");
  VarList both = Variables::of({"s", "c"});
  RatFunc g = value.p().with_variables(both) + RatFunc(MultiPoly::variable(both, "s")) * value.q().with_variables(both);
  return to_unique_form(g, FormMode::XForm, rel_s);
}

FixtureCheck compare_form(const std::string& name, const UniqueForm& got, const std::string& want_p,
                          const std::string& want_q, const VarList& vars) {
  RatFunc p = RatFunc::parse(want_p, vars);
  RatFunc q = RatFunc::parse(want_q, vars);
  FixtureCheck check{name, got.p == p && got.q == q, ""};
  check.detail = "p = " + got.p.to_string() + ", q = " + got.q.to_string();
  if (!check.pass) check.detail += "; want p = " + p.to_string() + ", q = " + q.to_string();
  return check;
}

std::vector<Int> divisors(const Int& value) {
  Int v = abs(value);
  std::vector<Int> out;
  for (Int i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      out.push_back(i);
      if (i * i != v) out.push_back(v / i);
    }
  }
  return out;
}

Int eval_int(const std::vector<Int>& coeffs, const Int& x) {
  Int acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

// f(v^k) and its inverse for univariate polynomials.
MultiPoly stretch(const MultiPoly& f, const VarList& vars, std::uint32_t k) {
  std::vector<MultiPoly::Term> terms;
  for (MultiPoly::Term t : f.terms()) {
    t.exps[0] *= k;
    terms.push_back(t);
  }
  return MultiPoly(vars, std::move(terms));
}

MultiPoly shrink(const MultiPoly& f, const VarList& vars, std::uint32_t k) {
  std::vector<MultiPoly::Term> terms;
  for (MultiPoly::Term t : f.terms()) {
    t.exps[0] /= k;
    terms.push_back(t);
  }
  return MultiPoly(vars, std::move(terms));
}

}  // namespace

std::optional<MultiPoly> kronecker_factor(const MultiPoly& f, unsigned degree) {
  const VarList& vars = f.vars();
  if (vars->size() != 1) throw InvalidArgument("Kronecker factoring needs a univariate polynomial");
  const std::vector<Int> coeffs = coefficient_list(f);
  if (degree == 0 || coeffs.size() <= degree + 1) return std::nullopt;

  std::vector<Int> points;
  std::vector<std::vector<Int>> choices;
  for (long k = 0; points.size() < degree + 1; ++k) {
    Int x = k % 2 == 0 ? Int(k / 2) : Int(-(k + 1) / 2);
    Int v = eval_int(coeffs, x);
    if (v == 0) continue;
    std::vector<Int> ds = divisors(v);
    std::vector<Int> signed_ds;
    for (const Int& dv : ds) {
      signed_ds.push_back(dv);
      if (!points.empty()) signed_ds.push_back(-dv);
    }
    points.push_back(x);
    choices.push_back(std::move(signed_ds));
  }

  std::vector<std::size_t> idx(points.size(), 0);
  for (;;) {
    // Lagrange interpolation through (points[i], choices[i][idx[i]]).
    std::vector<mpq_class> g(degree + 1, mpq_class(0));
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<mpq_class> basis{mpq_class(1)};
      mpq_class denom(1);
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (j == i) continue;
        std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
        for (std::size_t k = 0; k < basis.size(); ++k) {
          next[k + 1] += basis[k];
          next[k] -= basis[k] * mpq_class(points[j]);
        }
        basis = std::move(next);
        denom *= mpq_class(points[i] - points[j]);
      }
      mpq_class scale = mpq_class(choices[i][idx[i]]) / denom;
      for (std::size_t k = 0; k < basis.size(); ++k) g[k] += basis[k] * scale;
    }
    bool integral = g.back() != 0;
    for (mpq_class& c : g) {
      c.canonicalize();
      integral = integral && c.get_den() == 1;
    }
    if (integral) {
      std::vector<MultiPoly::Term> terms;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == 0) continue;
        MultiPoly::Term t;
        t.exps[0] = static_cast<std::uint32_t>(k);
        t.coeff = g[k].get_num();
        terms.push_back(t);
      }
      MultiPoly candidate(vars, std::move(terms));
      if (try_exact_div(f, candidate)) {
        Int c0 = candidate.constant_term();
        return (c0 < 0 || (c0 == 0 && candidate.leading_term().coeff < 0)) ? candidate * Int(-1) : candidate;
      }
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) return std::nullopt;
  }
}

bool GaussReport::pass() const {
  for (const FixtureCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string GaussReport::to_text() const {
  std::ostringstream out;
  for (const FixtureCheck& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  out << (pass() ? "all Gauss fixtures reproduced" : "Gauss fixture mismatch") << "\n";
  return out.str();
}

nlohmann::json GaussReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const FixtureCheck& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"checks", arr}, {"pass", pass()}};
}

GaussReport run_gauss_fixture() {
  GaussReport report;
  RelationPtr rel_c = CurveRelation::edwards_over_y(Int(1), Int(-1), "s", "c");
  const VarList& cvars = rel_c->base_vars;
  const VarList svars = Variables::of({"s"});
  FF s = FF::root(rel_c);
  FF c = FF::base(rel_c, RatFunc(MultiPoly::variable(cvars, "c")));
  FFCurve curve(s.from_int(Int(1)), s.from_int(Int(-1)));
  FFPoint p{s, c};

  std::vector<FFPoint> by_addition{curve.identity(), p};
  for (unsigned n = 2; n <= 5; ++n) by_addition.push_back(curve.add(by_addition.back(), p));
  for (unsigned n : {2U, 4U, 5U}) {
    FFPoint q = divpoly_multiple(rel_c, n);
    report.checks.push_back({"[" + std::to_string(n) + "](s,c): division polynomials = addition law",
                             q == by_addition[n], q == by_addition[n] ? "equal" : "differ"});
  }

  const FFPoint& two = by_addition[2];
  UniqueForm x2{two.x.p(), two.x.q(), FormMode::XForm};
  UniqueForm y2{two.y.p(), two.y.q(), FormMode::XForm};
  report.checks.push_back(compare_form("[2](s,c) x-coordinate in terms of c", x2, "0",
                                       "2*c*(c^2 + 1)/(c^4 + 1)", cvars));
  report.checks.push_back(compare_form("[2](s,c) y-coordinate in terms of c", y2, "(-c^4 - 2*c^2 + 1)/(c^4 - 2*c^2 - 1)",
                                       "0", cvars));
  report.checks.push_back(compare_form("cos lemn 2phi in terms of s", over_s(two.y),
                                       "(1 - 2*s^2 - s^4)/(1 + 2*s^2 - s^4)", "0", svars));

  UniqueForm cos4 = over_s(by_addition[4].y);
  report.checks.push_back(compare_form(
      "cos lemn 4phi in terms of s", cos4,
      "(1 - 8*s^2 - 12*s^4 - 8*s^6 + 38*s^8 + 8*s^10 - 12*s^12 + 8*s^14 + s^16)/"
      "(1 + 8*s^2 - 12*s^4 + 8*s^6 + 38*s^8 - 8*s^10 - 12*s^12 - 8*s^14 + s^16)",
      "0", svars));
  {
    std::vector<Int> num = coefficient_list(cos4.p.num().with_variables(svars));
    std::vector<Int> den = coefficient_list(cos4.p.den().with_variables(svars));
    std::vector<Int> reversed(num.rbegin(), num.rend());
    bool ok = reversed == den && num.size() == 17;
    report.checks.push_back({"cos lemn 4phi reverse symmetry", ok,
                             "numerator " + join(num) + ", denominator " + join(den)});
  }

  UniqueForm sin5 = over_s(by_addition[5].x);
  FixtureCheck s12{"sin lemn 5phi denominator s^12 coefficient", false, ""};
  if (!sin5.q.is_zero()) {
    s12.detail = "x([5]P) is not a rational function of s alone";
  } else {
    MultiPoly den = sin5.p.den().with_variables(svars);
    bool in_s4 = true;
    for (const MultiPoly::Term& t : den.terms()) in_s4 = in_s4 && t.exps[0] % 4 == 0;
    if (!in_s4) {
      s12.detail = "denominator is not a polynomial in s^4: " + den.to_string();
    } else {
      MultiPoly w_den = shrink(den, Variables::of({"w"}), 4);
      std::optional<MultiPoly> small = kronecker_factor(w_den, 2);
      if (!small) {
        s12.detail = "denominator " + den.to_string() + " has no quadratic factor in s^4";
      } else {
        MultiPoly large = exact_div(w_den, *small);
        if (large.constant_term() < 0) large = large * Int(-1);
        std::vector<Int> lc = coefficient_list(large);
        MultiPoly large_in_s = stretch(large, svars, 4);
        MultiPoly small_in_s = stretch(*small, svars, 4);
        const Int coeff12 = lc.size() > 3 ? lc[3] : Int(0);
        s12.pass = lc.size() == 5 && coeff12 == -12;
        s12.detail = "denominator = (" + small_in_s.to_string() + ")*(" + large_in_s.to_string() +
                     "), s^12 coefficient of the degree-16 factor = " + edp::to_string(coeff12);
      }
    }
  }
  report.checks.push_back(s12);
  return report;
}

void require_gauss_fixture() {
  GaussReport report = run_gauss_fixture();
  if (report.pass()) return;
  std::string diff;
  for (const FixtureCheck& c : report.checks) {
    if (!c.pass) diff += c.name + ": " + c.detail + "\n";
  }
  throw FixtureMismatch(diff);
}

}  // namespace edp
