#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edp/algebra/expr.hpp"
#include "edp/algebra/integer.hpp"
#include "edp/altrec.hpp"
#include "edp/app/gauss.hpp"
#include "edp/app/verify.hpp"
#include "edp/curves/prime_curves.hpp"
#include "edp/edivpoly.hpp"
#include "edp/funcfield.hpp"
#include "edp/wdivpoly.hpp"

namespace {

using nlohmann::json;
using namespace edp;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text, std::size_t count, const char* what) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != count) {
    throw UsageError(std::string(what) + " expects " + std::to_string(count) + " comma-separated integers");
  }
  return parts;
}

FpCurve parse_curve(const std::string& text) {
  auto parts = split_commas(text, 3, "--curve");
  return make_curve(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
}

FpPoint parse_point(const FpCurve& curve, const std::string& text) {
  auto parts = split_commas(text, 2, "--point");
  const FieldPtr& field = curve.a().field();
  return curve.point(Fp(field, parse_int(parts[0])), Fp(field, parse_int(parts[1])));
}

json point_json(const FpPoint& p) { return {{"x", p.x.to_string()}, {"y", p.y.to_string()}}; }

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json poly_json(const MultiPoly& p) { return {{"text", p.to_string()}, {"terms", p.to_json()}}; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EDWARDS_DIVPOLY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("EDWARDS_DIVPOLY_SEED must be a non-negative integer");
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Division polynomials for twisted Edwards curves"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON instead of text");

  unsigned n = 0;
  std::string modulus;
  std::string curve_text;
  std::string point_text;
  std::string method = "divpoly";
  std::string expr_text;
  bool curve_symbolic = false;
  bool inverse_x = false;
  VerifyOptions vopt;
  std::optional<std::uint64_t> seed;

  auto* psitilde = app.add_subcommand("psitilde", "Print psi~_N in Z[a, d, y]");
  psitilde->add_option("N", n, "Index")->required()->check(CLI::Range(0U, PsiTildeTable::kMaxIndex));
  psitilde->add_option("--modulus", modulus, "Reduce the coefficients mod a prime");

  auto* psi = app.add_subcommand("psi", "Print psi_N in terms of psi~_N");
  psi->add_option("N", n, "Index")->required()->check(CLI::Range(0U, PsiTildeTable::kMaxIndex));

  auto* wpsi_cmd = app.add_subcommand("wpsi", "Print the Weierstrass division polynomial Psi_N");
  wpsi_cmd->add_option("N", n, "Index")->required()->check(CLI::Range(0U, 256U));

  auto* pq = app.add_subcommand("pq", "Print P_N and Q_N in Z[a, d, t], t = x^2");
  pq->add_option("N", n, "Index")->required()->check(CLI::Range(1U, PQTable::kMaxIndex));

  auto* mul = app.add_subcommand("mul", "Compute [n]P");
  mul->add_option("--curve", curve_text, "a,d,p")->required();
  mul->add_option("--point", point_text, "x,y")->required();
  mul->add_option("--n", n, "Multiplier")->required()->check(CLI::Range(0U, 1U << 20));
  mul->add_option("--method", method, "Algorithm")
      ->check(CLI::IsMember({"divpoly", "naive", "weierstrass", "altrec"}));

  auto* torsion = app.add_subcommand("torsion", "Decide whether P is n-torsion");
  torsion->add_option("--curve", curve_text, "a,d,p")->required();
  torsion->add_option("--point", point_text, "x,y")->required();
  torsion->add_option("--n", n, "Index")->required()->check(CLI::Range(0U, 1U << 20));

  auto* uniqform = app.add_subcommand("uniqform", "Unique form p + x q of a function on the generic curve");
  uniqform->add_flag("--curve-symbolic", curve_symbolic, "Use the generic curve over Q(a, d)")->required();
  uniqform->add_option("--expr", expr_text, "Rational expression in x, y, a, d")->required();
  uniqform->add_flag("--inverse-x", inverse_x, "Write the result as p + q / x");

  auto* gauss = app.add_subcommand("gauss", "Check the lemniscate formulas");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--n-max", vopt.n_max, "Largest index")->check(CLI::Range(4U, 64U));
  verify->add_option("--trials", vopt.trials, "Sampled curves and expressions");
  verify->add_option("--seed", seed, "Seed (default: EDWARDS_DIVPOLY_SEED or 1)");
  verify->add_flag("--corrupt-psi3", vopt.corrupt_psi3)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (psitilde->parsed()) {
      MultiPoly f = psi_tilde(n);
      json j{{"n", n}};
      if (!modulus.empty()) {
        Int p = parse_int(modulus);
        PrimeField::create(p);
        f = f.reduce_mod(p);
        j["modulus"] = to_string(p);
      }
      j["psi_tilde"] = poly_json(f);
      emit(as_json, j, f.to_string() + "\n");
    } else if (psi->parsed()) {
      PsiForm form = psi_form(n);
      json j{{"n", n}, {"k", form.kpow}, {"m", form.mpow}, {"gamma", form.xpow},
             {"form", form.to_string()}, {"psi_tilde", poly_json(form.core)}};
      emit(as_json, j, "psi_" + std::to_string(n) + " = " + form.to_string() + "\n");
    } else if (wpsi_cmd->parsed()) {
      WPsi w = wpsi(n);
      json j{{"n", n}, {"has_v", w.has_v}, {"poly", poly_json(w.poly)}, {"text", w.to_string()}};
      emit(as_json, j, w.to_string() + "\n");
    } else if (pq->parsed()) {
      const PQPair& pair = pq_pair(n);
      json j{{"n", n}, {"P", poly_json(pair.P)}, {"Q", poly_json(pair.Q)}};
      emit(as_json, j, "P_" + std::to_string(n) + " = " + pair.P.to_string() + "\nQ_" + std::to_string(n) +
                           " = " + pair.Q.to_string() + "\n");
    } else if (mul->parsed()) {
      FpCurve curve = parse_curve(curve_text);
      FpPoint p = parse_point(curve, point_text);
      FpPoint q = curve.identity();
      if (method == "divpoly") {
        q = edwards_mul_divpoly(curve, p, n);
      } else if (method == "naive") {
        q = curve.scalar_mul_naive(p, n);
      } else if (method == "altrec") {
        q = altrec_mul(curve, p, n);
      } else {
        FpWCurve w = curve.weierstrass();
        FpWPoint wq = FpWPoint::infinity();
        try {
          wq = wmul(w, curve.to_weierstrass(p), n);
        } catch (const TorsionDenominator&) {
        }
        q = curve.from_weierstrass(wq);
      }
      json j{{"point", point_json(p)}, {"n", n}, {"method", method}, {"result", point_json(q)}};
      emit(as_json, j, q.to_string() + "\n");
    } else if (torsion->parsed()) {
      FpCurve curve = parse_curve(curve_text);
      FpPoint p = parse_point(curve, point_text);
      TorsionVerdict v = is_n_torsion(curve, p, n);
      json j{{"point", point_json(p)}, {"n", n}, {"is_torsion", v.is_torsion}, {"witness", v.witness.to_string()}};
      emit(as_json, j,
           p.to_string() + (v.is_torsion ? " is " : " is not ") + std::to_string(n) + "-torsion (psi~_" +
               std::to_string(n) + "(y) = " + v.witness.to_string() + ")\n");
    } else if (uniqform->parsed()) {
      const VarList vars = Variables::of({"a", "d", "y", "x"});
      ExprPtr e = parse_expression(expr_text);
      UniqueForm u = to_unique_form(RatFunc::from_expr(*e, vars),
                                    inverse_x ? FormMode::InverseXForm : FormMode::XForm);
      json j{{"expr", expr_text},
             {"mode", inverse_x ? "inverse-x" : "x"},
             {"p", u.p.to_string()},
             {"q", u.q.to_string()},
             {"form", u.to_string()}};
      emit(as_json, j, "p = " + u.p.to_string() + "\nq = " + u.q.to_string() + "\n");
    } else if (gauss->parsed()) {
      GaussReport r = run_gauss_fixture();
      emit(as_json, r.to_json(), r.to_text());
      return r.pass() ? kPass : kFail;
    } else if (verify->parsed()) {
      vopt.seed = seed ? *seed : default_seed();
      VerifyReport r = run_verify(vopt);
      emit(as_json, r.to_json(), r.to_text());
      return r.pass() ? kPass : kFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidCurve& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidModulus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotOnCurve& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnboundVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kPass;
}
