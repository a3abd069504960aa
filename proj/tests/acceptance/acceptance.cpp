#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "edp/algebra/expr.hpp"
#include "edp/altrec.hpp"
#include "edp/app/gauss.hpp"
#include "edp/curves/prime_curves.hpp"
#include "edp/edivpoly.hpp"
#include "edp/funcfield.hpp"
#include "edp/wdivpoly.hpp"

using namespace edp;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Int coefficient_of(const MultiPoly& f, const std::string& monomial) {
  MultiPoly m = MultiPoly::parse(monomial, f.vars());
  const auto& exps = m.terms().front().exps;
  for (const MultiPoly::Term& t : f.terms()) {
    if (t.exps == exps) return t.coeff;
  }
  return Int(0);
}

Outcome base_cases() {
  const VarList& v = psi_tilde_variables();
  const char* psi[] = {"0", "1", "y + 1", "-d*y^4 - 2*d*y^3 + 2*a*y + a", "-2*d*y^6 - 2*d*y^5 + 2*a*y^2 + 2*a*y"};
  for (unsigned n = 0; n <= 4; ++n) {
    if (!(psi_tilde(n) == MultiPoly::parse(psi[n], v))) return {false, "psi~_" + std::to_string(n)};
  }
  const VarList& w = wpsi_variables();
  const char* big_psi[] = {"2", "3*u^4 + 6*A*u^2 + 12*B*u - A^2",
                           "4*(u^6 + 5*A*u^4 + 20*B*u^3 - 5*A^2*u^2 - 4*A*B*u - A^3 - 8*B^2)"};
  for (unsigned n = 2; n <= 4; ++n) {
    WPsi p = wpsi(n);
    if (p.has_v != (n % 2 == 0) || !(p.poly == MultiPoly::parse(big_psi[n - 2], w))) {
      return {false, "Psi_" + std::to_string(n) + " = " + p.to_string()};
    }
  }
  return {true, "psi~_0..4 and Psi_2..4 equal the reference polynomials"};
}

Outcome extreme_terms() {
  struct Want {
    unsigned n;
    const char* monomial;
    long coeff;
  };
  const Want wants[] = {{5, "d^3*y^12", 1},   {5, "d^3*y^11", -2},  {5, "a^3*y", 2},      {5, "a^3", -1},
                        {6, "d^4*y^17", -1},  {6, "d^4*y^16", -1},  {6, "a*d^3*y^15", 4}, {6, "d^4*y^15", 4},
                        {6, "a^3*d*y^2", 4},  {6, "a^4*y^2", 4},    {6, "a^4*y", -1},     {6, "a^4", -1}};
  for (const Want& w : wants) {
    Int c = coefficient_of(psi_tilde(w.n), w.monomial);
    if (c != w.coeff) {
      return {false, "psi~_" + std::to_string(w.n) + " coefficient of " + w.monomial + " is " + to_string(c)};
    }
  }
  const std::size_t y = 2;
  if (psi_tilde(5).degree(y) != 12 || psi_tilde(6).degree(y) != 17) return {false, "y-degrees differ"};
  return {true, "12 expected extreme terms present with their coefficients"};
}

Outcome structural_suite() {
  unsigned checks = 0;
  for (unsigned n = 5; n <= 20; ++n) {
    std::vector<CheckReport> reports{check_integrality(n), check_degree(n), check_leading(n), check_trailing(n),
                                     check_homogeneity(n), check_symmetry(n)};
    if (n % 2 == 0) reports.push_back(check_even_factor(n));
    for (const CheckReport& r : reports) {
      ++checks;
      if (!r.pass) return {false, r.theorem + " n = " + std::to_string(n) + ": " + r.detail};
    }
  }
  return {true, std::to_string(checks) + " theorem instances for 5 <= n <= 20"};
}

Outcome modular_branch() {
  const Int p(5);
  MultiPoly f = psi_tilde(20).reduce_mod(p);
  const std::size_t y = 2;
  const std::uint64_t bound = m_of(20) - 1;
  if (bound != 198) return {false, "m(20) - 1 = " + std::to_string(bound)};
  if (f.is_zero()) return {false, "psi~_20 vanishes mod 5"};
  const unsigned top = f.degree(y);
  const unsigned low = f.min_degree(y);
  std::vector<CheckReport> reports{check_degree(20, p), check_leading(20, p), check_trailing(20, p)};
  for (const CheckReport& r : reports) {
    if (!r.pass) return {false, r.theorem + ": " + r.detail};
  }
  std::string detail = "deg_y = " + std::to_string(top) + ", lowest y-degree = " + std::to_string(low);
  return {top < bound && low > 1, detail};
}

// The chord-tangent group law on the Weierstrass model never fails, so it
// decides [n]P = O whenever the Edwards addition law hits a zero denominator.
std::vector<bool> identity_oracle(const FpCurve& c, const FpPoint& p, unsigned n_max) {
  std::vector<bool> out{true};
  try {
    FpPoint q = c.identity();
    for (unsigned n = 1; n <= n_max; ++n) {
      q = c.add(q, p);
      out.push_back(c.is_identity(q));
    }
    return out;
  } catch (const ExceptionalDenominator&) {
  }
  out.assign(1, true);
  FpWCurve w = c.weierstrass();
  FpWPoint wp = c.to_weierstrass(p);
  FpWPoint q = FpWPoint::infinity();
  for (unsigned n = 1; n <= n_max; ++n) {
    q = w.add(q, wp);
    out.push_back(q.is_infinity());
  }
  return out;
}

const long kPrimes[] = {13, 101, 1009, 10007};

Outcome multiplication() {
  std::mt19937_64 rng(5);
  std::uint64_t compared = 0;
  std::uint64_t weierstrass = 0;
  for (long prime : kPrimes) {
    FieldPtr field = PrimeField::create(Int(prime));
    for (int k = 0; k < 3; ++k) {
      FpCurve c = random_complete_curve(field, rng);
      FpWCurve w = c.weierstrass();
      for (int i = 0; i < 100; ++i) {
        FpPoint p = random_point(c, rng);
        FpPoint naive = c.identity();
        std::vector<Fp> xs = alt_x_multiples(c, p, 32);
        for (unsigned n = 1; n <= 32; ++n) {
          naive = c.add(naive, p);
          std::ostringstream where;
          where << "p = " << prime << ", a = " << c.a().to_string() << ", d = " << c.d().to_string()
                << ", P = " << p.to_string() << ", n = " << n;
          if (!(edwards_mul_divpoly(c, p, n) == naive)) return {false, "divpoly at " + where.str()};
          if (!(altrec_mul(c, p, n) == naive)) return {false, "altrec at " + where.str()};
          if (!(xs[n] == naive.x)) return {false, "alt_x_multiple at " + where.str()};
          if (n == 32 && !(c.scalar_mul_naive(p, n) == naive)) return {false, "double-and-add at " + where.str()};
          ++compared;
          FpWPoint q = FpWPoint::infinity();
          try {
            q = wmul(w, c.to_weierstrass(p), n);
          } catch (const TorsionDenominator&) {
          }
          try {
            if (!(c.from_weierstrass(q) == naive)) return {false, "weierstrass at " + where.str()};
            ++weierstrass;
          } catch (const ExceptionalPoint&) {
          }
        }
      }
    }
  }
  return {true, std::to_string(compared) + " (P, n) pairs, " + std::to_string(weierstrass) +
                    " also through the Weierstrass model"};
}

Outcome pullback() {
  std::mt19937_64 rng(6);
  std::uint64_t compared = 0;
  for (long prime : kPrimes) {
    FieldPtr field = PrimeField::create(Int(prime));
    for (int k = 0; k < 3; ++k) {
      FpCurve c = random_curve(field, rng);
      FpWCurve w = c.weierstrass();
      int points = 0;
      while (points < 200) {
        FpPoint p = random_point(c, rng);
        if (p.x.is_zero()) continue;
        ++points;
        std::vector<Fp> ed = psi_values(c, p, 16);
        std::vector<Fp> we = wpsi_values(w, c.to_weierstrass(p), 16);
        for (unsigned n = 0; n <= 16; ++n) {
          ++compared;
          if (!(ed[n] == we[n])) {
            return {false, "p = " + std::to_string(prime) + ", P = " + p.to_string() + ", n = " + std::to_string(n)};
          }
        }
      }
    }
  }
  return {true, std::to_string(compared) + " values"};
}

Outcome torsion_census() {
  struct Plan {
    long prime;
    unsigned curves;  // 0 means every valid (a, d)
  };
  const Plan plans[] = {{5, 0}, {13, 0}, {29, 0}, {97, 200}};
  std::mt19937_64 rng(7);
  std::uint64_t verdicts = 0;
  std::uint64_t curves = 0;
  for (const Plan& plan : plans) {
    FieldPtr field = PrimeField::create(Int(plan.prime));
    std::vector<FpCurve> list;
    if (plan.curves == 0) {
      for (long a = 1; a < plan.prime; ++a) {
        for (long d = 1; d < plan.prime; ++d) {
          if (a != d) list.emplace_back(Fp(field, Int(a)), Fp(field, Int(d)));
        }
      }
    } else {
      for (unsigned i = 0; i < plan.curves; ++i) list.push_back(random_curve(field, rng));
    }
    for (const FpCurve& c : list) {
      ++curves;
      const unsigned order = static_cast<unsigned>(enumerate_points(c.weierstrass()).size());
      for (const FpPoint& p : enumerate_points(c)) {
        std::vector<TorsionVerdict> got = torsion_verdicts(c, p, order);
        std::vector<bool> want = identity_oracle(c, p, order);
        for (unsigned n = 1; n <= order; ++n) {
          ++verdicts;
          if (got[n].is_torsion != want[n]) {
            return {false, "p = " + std::to_string(plan.prime) + ", a = " + c.a().to_string() + ", d = " +
                               c.d().to_string() + ", P = " + p.to_string() + ", n = " + std::to_string(n)};
          }
        }
      }
    }
  }
  return {true, std::to_string(curves) + " curves, " + std::to_string(verdicts) + " verdicts, 0 discrepancies"};
}

Outcome gauss() {
  GaussReport r = run_gauss_fixture();
  std::string failed;
  for (const FixtureCheck& c : r.checks) {
    if (!c.pass) failed += c.name + "; ";
  }
  if (!r.pass()) return {false, failed};
  return {true, std::to_string(r.checks.size()) + " fixtures"};
}

Outcome unique_forms() {
  std::mt19937_64 rng(9);
  const VarList vars = Variables::of({"a", "d", "y", "x"});
  FieldPtr field = PrimeField::create(Int(1000003));
  unsigned expressions = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t poles = 0;
  while (expressions < 500) {
    std::string text = random_expression_text(rng, 3);
    ExprPtr e = parse_expression(text);
    RatFunc g;
    UniqueForm u;
    try {
      g = RatFunc::from_expr(*e, vars);
      u = to_unique_form(g);
    } catch (const ZeroDenominator&) {
      continue;
    } catch (const DegenerateDenominator&) {
      continue;
    }
    ++expressions;
    UniqueForm inv = to_unique_form(g, FormMode::InverseXForm);
    if (!(mode_convert(u) == inv) || !(mode_convert(inv) == u)) return {false, "mode_convert on " + text};
    for (int k = 0; k < 100; ++k) {
      FpCurve c = random_curve(field, rng);
      FpPoint p = random_point(c, rng);
      std::map<std::string, Fp> values{{"a", c.a()}, {"d", c.d()}, {"x", p.x}, {"y", p.y}};
      try {
        Fp direct = evaluate_expr<Fp>(*e, [&](const std::string& n) { return values.at(n); }, p.x);
        Fp form = evaluate_form(u, values);
        ++evaluations;
        if (!(form == direct)) return {false, text + " at " + p.to_string()};
      } catch (const DivisionByZero&) {
        ++poles;
      }
    }
  }
  return {true, std::to_string(expressions) + " expressions, " + std::to_string(evaluations) +
                    " evaluations agree, " + std::to_string(poles) + " points at a pole skipped"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "base-case fidelity", 1.0, base_cases},
      {2, "extreme-term fidelity for psi~_5, psi~_6", 1.0, extreme_terms},
      {3, "structural theorem suite 5 <= n <= 20", 60.0, structural_suite},
      {4, "degenerate branch of psi~_20 mod 5", 60.0, modular_branch},
      {5, "multiplication equivalence", 120.0, multiplication},
      {6, "pullback identity", 60.0, pullback},
      {7, "torsion census", 120.0, torsion_census},
      {8, "Gauss fixtures", 10.0, gauss},
      {9, "unique-form soundness", 30.0, unique_forms},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = out.pass && in_budget;
    all = all && pass;
    std::ostringstream line;
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << ": " << out.detail << " ["
         << std::fixed << seconds << " s, budget " << c.budget_seconds << " s"
         << (in_budget ? "" : ", over budget") << ", tolerance 0]";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
