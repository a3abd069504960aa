#include "edp/app/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "edp/algebra/expr.hpp"
#include "edp/altrec.hpp"
#include "edp/app/gauss.hpp"
#include "edp/curves/prime_curves.hpp"
#include "edp/edivpoly.hpp"
#include "edp/funcfield.hpp"
#include "edp/wdivpoly.hpp"

namespace edp {

namespace {

class Tally {
 public:
  void record(const std::string& theorem, bool ok, const std::function<std::string()>& detail) {
    auto [it, inserted] = index_.try_emplace(theorem, checks_.size());
    if (inserted) checks_.push_back(VerifyCheck{theorem, 0, 0, ""});
    VerifyCheck& c = checks_[it->second];
    ++c.total;
    if (ok) {
      ++c.passed;
    } else if (c.first_failure.empty()) {
      c.first_failure = detail();
    }
  }

  // Runs `body`; a library error counts as a failure with its message.
  void guarded(const std::string& theorem, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      record(theorem, ok, [&] { return detail; });
    } catch (const Error& e) {
      record(theorem, false, [&] { return std::string("error: ") + e.what(); });
    }
  }

  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  std::vector<VerifyCheck> checks_;
  std::map<std::string, std::size_t> index_;
};

std::pair<bool, std::string> from_report(const CheckReport& r) {
  return {r.pass, "n = " + std::to_string(r.n) + ": " + r.detail};
}

void symbolic_checks(Tally& tally, PsiTildeTable& table, unsigned n_max) {
  const VarList& v = psi_tilde_variables();
  const char* expected[] = {"0", "1", "y + 1", "-d*y^4 - 2*d*y^3 + 2*a*y + a", "-2*d*y^6 - 2*d*y^5 + 2*a*y^2 + 2*a*y"};
  for (unsigned n = 0; n <= 4; ++n) {
    tally.guarded("psi~ base cases", [&] {
      MultiPoly want = MultiPoly::parse(expected[n], v);
      const MultiPoly& got = table.get(n);
      return std::pair{got == want, "psi~_" + std::to_string(n) + " = " + got.to_string() + ", want " + want.to_string()};
    });
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    tally.guarded("integrality of psi~_n", [&] { return from_report(check_integrality(n, table)); });
    if (n % 2 == 0) {
      tally.guarded("(y+1) divides psi~_n for even n", [&] { return from_report(check_even_factor(n, table)); });
    }
    tally.guarded("degree of psi~_n", [&] { return from_report(check_degree(n, 0, table)); });
    tally.guarded("leading term of psi~_n", [&] { return from_report(check_leading(n, 0, table)); });
    tally.guarded("trailing term of psi~_n", [&] { return from_report(check_trailing(n, 0, table)); });
    tally.guarded("homogeneity of psi~_n in (a, d)", [&] { return from_report(check_homogeneity(n, table)); });
    tally.guarded("coefficient symmetry of psi~_n", [&] { return from_report(check_symmetry(n, table)); });
  }
}

void modular_checks(Tally& tally, PsiTildeTable& table, unsigned n_max, std::vector<std::string>& notes) {
  bool any = false;
  for (long p = 5; 4 * p <= static_cast<long>(n_max); ++p) {
    if (!is_prime(Int(p))) continue;
    any = true;
    const unsigned n = static_cast<unsigned>(4 * p);
    const Int mod(p);
    tally.guarded("degenerate branch mod p (4p | n)", [&] {
      CheckReport deg = check_degree(n, mod, table);
      CheckReport lead = check_leading(n, mod, table);
      CheckReport trail = check_trailing(n, mod, table);
      return std::pair{deg.pass && lead.pass && trail.pass,
                       "n = " + std::to_string(n) + ": " + lead.detail + "; " + trail.detail};
    });
  }
  if (!any) notes.push_back("degenerate branch mod p skipped: no prime p >= 5 with 4p <= n_max");
}

void weierstrass_checks(Tally& tally, unsigned n_max) {
  const VarList& v = wpsi_variables();
  const std::pair<unsigned, const char*> expected[] = {
      {2, "2"},
      {3, "3*u^4 + 6*A*u^2 + 12*B*u - A^2"},
      {4, "4*(u^6 + 5*A*u^4 + 20*B*u^3 - 5*A^2*u^2 - 4*A*B*u - A^3 - 8*B^2)"}};
  for (const auto& [n, text] : expected) {
    tally.guarded("Psi base cases", [&] {
      WPsi w = wpsi(n);
      MultiPoly want = MultiPoly::parse(text, v);
      return std::pair{w.poly == want && w.has_v == (n % 2 == 0), "Psi_" + std::to_string(n) + " = " + w.to_string()};
    });
  }
  const std::size_t u = v->index_of("u").value();
  for (unsigned n = 1; n <= n_max; ++n) {
    tally.guarded("degree of Psi_n in u", [&] {
      WPsi w = wpsi(n);
      const unsigned want = n % 2 == 1 ? (n * n - 1) / 2 : (n * n - 4) / 2;
      return std::pair{w.poly.degree(u) == want,
                       "n = " + std::to_string(n) + ": degree " + std::to_string(w.poly.degree(u))};
    });
  }
}

std::string point_text(const FpCurve& c, const FpPoint& p, unsigned n) {
  return "a = " + c.a().to_string() + ", d = " + c.d().to_string() + ", p = " +
         edp::to_string(c.a().modulus()) + ", P = " + p.to_string() + ", n = " + std::to_string(n);
}

void sampled_checks(Tally& tally, const PsiTildeBases& bases, const VerifyOptions& opt, std::mt19937_64& rng,
                    std::vector<std::string>& notes) {
  static const long primes[] = {13, 101, 1009, 10007};
  std::uint64_t alpha_skipped = 0;
  std::uint64_t weierstrass_skipped = 0;
  for (unsigned trial = 0; trial < opt.trials; ++trial) {
    FieldPtr field = PrimeField::create(Int(primes[trial % 4]));
    FpCurve c = random_complete_curve(field, rng);
    FpPoint p = random_point(c, rng);
    FpWCurve w = c.weierstrass();
    std::vector<FpPoint> naive{c.identity()};
    for (unsigned n = 1; n <= 2 * opt.n_max + 1; ++n) naive.push_back(c.add(naive.back(), p));

    std::vector<Fp> xs;
    std::vector<std::pair<Fp, Fp>> pq = pq_values(c.a(), c.d(), p.x * p.x, opt.n_max);
    std::vector<TorsionVerdict> verdicts;
    tally.guarded("torsion verdict = naive order", [&] {
      verdicts = torsion_verdicts(c, p, opt.n_max, bases);
      return std::pair{true, std::string()};
    });
    for (unsigned n = 1; n <= opt.n_max; ++n) {
      const std::string where = point_text(c, p, n);
      tally.guarded("[n]P by division polynomials = naive", [&] {
        FpPoint q = edwards_mul_divpoly(c, p, n, bases);
        return std::pair{q == naive[n], where + ": got " + q.to_string() + ", want " + naive[n].to_string()};
      });
      tally.guarded("[n]P by P/Q recursion and y-recovery = naive", [&] {
        FpPoint q = altrec_mul(c, p, n);
        return std::pair{q == naive[n], where + ": got " + q.to_string()};
      });
      if (!verdicts.empty()) {
        tally.record("torsion verdict = naive order", verdicts[n].is_torsion == c.is_identity(naive[n]),
                     [&] { return where; });
      }
      if (!p.x.is_zero()) {
        try {
          FpWPoint q = wmul(w, c.to_weierstrass(p), n);
          FpPoint back = c.from_weierstrass(q);
          tally.record("Weierstrass [n] through the birational maps = naive", back == naive[n],
                       [&] { return where + ": got " + back.to_string(); });
        } catch (const TorsionDenominator&) {
          tally.record("Weierstrass [n] through the birational maps = naive", c.is_identity(naive[n]),
                       [&] { return where + ": Psi_n vanished but [n]P is not the identity"; });
        } catch (const ExceptionalPoint&) {
          ++weierstrass_skipped;
        }
      }
      try {
        Fp alpha = alpha_eval(n, p.x * p.x, c.a(), c.d());
        tally.record("alpha_n = P_n/Q_n", pq[n].second * alpha == pq[n].first, [&] { return where; });
      } catch (const ExceptionalDenominator&) {
        ++alpha_skipped;
      }
      if (!p.x.is_zero() && n >= 1) {
        try {
          Fp x = recover_x(c, p.x, p.y, naive[n].y, naive[n - 1].y);
          tally.record("x_n recovered from y-coordinates = naive", x == naive[n].x, [&] { return where; });
        } catch (const ExceptionalDenominator&) {
        }
      }
    }
    if (!p.x.is_zero()) {
      tally.guarded("pullback Psi_n(u(P), v(P)) = psi_n(P)", [&] {
        std::vector<Fp> ed = psi_values(c, p, opt.n_max, bases);
        std::vector<Fp> we = wpsi_values(w, c.to_weierstrass(p), opt.n_max);
        for (unsigned n = 0; n <= opt.n_max; ++n) {
          if (!(ed[n] == we[n])) return std::pair{false, point_text(c, p, n)};
        }
        return std::pair{true, std::string()};
      });
    }
  }
  if (alpha_skipped != 0) {
    notes.push_back("alpha_n skipped at " + std::to_string(alpha_skipped) + " inputs where a recursion denominator vanished");
  }
  if (weierstrass_skipped != 0) {
    notes.push_back("Weierstrass route skipped at " + std::to_string(weierstrass_skipped) +
                    " inputs whose multiple has no affine Edwards image");
  }
}

void unique_form_checks(Tally& tally, const VerifyOptions& opt, std::mt19937_64& rng) {
  const VarList vars = Variables::of({"a", "d", "y", "x"});
  FieldPtr field = PrimeField::create(Int(1000003));
  unsigned done = 0;
  while (done < opt.trials) {
    std::string text = random_expression_text(rng, 3);
    ExprPtr e = parse_expression(text);
    std::optional<UniqueForm> u;
    try {
      u = to_unique_form(RatFunc::from_expr(*e, vars));
    } catch (const ZeroDenominator&) {
      continue;
    } catch (const DegenerateDenominator&) {
      continue;
    }
    ++done;
    tally.record("unique form mode round trip", mode_convert(mode_convert(*u)) == *u, [&] { return text; });
    for (int k = 0; k < 5; ++k) {
      FpCurve c = random_curve(field, rng);
      FpPoint p = random_point(c, rng);
      std::map<std::string, Fp> values{{"a", c.a()}, {"d", c.d()}, {"x", p.x}, {"y", p.y}};
      try {
        Fp direct = evaluate_expr<Fp>(*e, [&](const std::string& n) { return values.at(n); }, p.x);
        Fp form = evaluate_form(*u, values);
        tally.record("unique form agrees with the expression on the curve", form == direct,
                     [&] { return text + " at " + p.to_string(); });
      } catch (const DivisionByZero&) {
      }
    }
  }
}

void gauss_checks(Tally& tally) {
  tally.guarded("Gauss lemniscate fixtures", [&] {
    GaussReport r = run_gauss_fixture();
    std::string detail;
    for (const FixtureCheck& c : r.checks) {
      if (!c.pass) detail += c.name + ": " + c.detail + "; ";
    }
    return std::pair{r.pass(), detail};
  });
}

void pq_degree_notes(unsigned n_max, std::vector<std::string>& notes) {
  std::string line = "observed deg_t (P_n, Q_n):";
  const std::size_t t = pq_variables()->index_of("t").value();
  for (unsigned n = 1; n <= std::min(n_max, 6U); ++n) {
    const PQPair& pq = pq_pair(n);
    line += " n=" + std::to_string(n) + ":(" + std::to_string(pq.P.degree(t)) + "," +
            std::to_string(pq.Q.degree(t)) + ")";
  }
  notes.push_back(line);
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass(); });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "verify n_max=" << options.n_max << " trials=" << options.trials << " seed=" << options.seed;
  if (options.corrupt_psi3) out << " corrupt-psi3";
  out << "\n";
  for (const VerifyCheck& c : checks) {
    out << (c.pass() ? "PASS " : "FAIL ") << c.theorem << ": " << c.passed << "/" << c.total;
    if (!c.pass()) out << " (first failure: " << c.first_failure << ")";
    out << "\n";
  }
  for (const std::string& n : notes) out << "note: " << n << "\n";
  out << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const VerifyCheck& c : checks) {
    arr.push_back({{"theorem", c.theorem},
                   {"passed", c.passed},
                   {"total", c.total},
                   {"pass", c.pass()},
                   {"first_failure", c.first_failure}});
  }
  return {{"n_max", options.n_max}, {"trials", options.trials}, {"seed", options.seed},
          {"corrupt_psi3", options.corrupt_psi3}, {"checks", arr}, {"notes", notes}, {"pass", pass()}};
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.n_max < 4) throw InvalidArgument("verify needs n_max >= 4");
  VerifyReport report;
  report.options = options;
  Tally tally;
  std::mt19937_64 rng(options.seed);
  const PsiTildeBases bases = options.corrupt_psi3 ? PsiTildeBases::corrupted() : PsiTildeBases::standard();
  std::unique_ptr<PsiTildeTable> own;
  PsiTildeTable* table = &PsiTildeTable::standard();
  if (options.corrupt_psi3) {
    own = std::make_unique<PsiTildeTable>(bases);
    table = own.get();
  }
  symbolic_checks(tally, *table, options.n_max);
  modular_checks(tally, *table, options.n_max, report.notes);
  weierstrass_checks(tally, options.n_max);
  gauss_checks(tally);
  if (options.trials > 0) {
    sampled_checks(tally, bases, options, rng, report.notes);
    unique_form_checks(tally, options, rng);
  }
  pq_degree_notes(options.n_max, report.notes);
  report.checks = tally.take();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const VerifyCheck& l, const VerifyCheck& r) { return l.theorem < r.theorem; });
  return report;
}

}  // namespace edp
