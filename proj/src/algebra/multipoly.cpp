#include "edp/algebra/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "edp/algebra/expr.hpp"

namespace edp {

namespace {

struct ExponentsHash {
  std::size_t operator()(const MultiPoly::Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t v : e) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

std::uint32_t total(const MultiPoly::Exponents& e) {
  std::uint32_t s = 0;
  for (std::uint32_t v : e) s += v;
  return s;
}

MultiPoly::Exponents add_exps(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  MultiPoly::Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides(const MultiPoly::Exponents& d, const MultiPoly::Exponents& n) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (d[i] > n[i]) return false;
  }
  return true;
}

MultiPoly::Exponents sub_exps(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  MultiPoly::Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

struct GrlexGreater {
  bool operator()(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) const {
    return grlex_greater(a, b);
  }
};

VarList empty_vars() {
  static const VarList vars = Variables::of({});
  return vars;
}

// Brings both operands onto one variable list.
std::pair<MultiPoly, MultiPoly> unify(const MultiPoly& f, const MultiPoly& g) {
  VarList merged = merge_variables(f.vars(), g.vars());
  return {f.with_variables(merged), g.with_variables(merged)};
}

bool same_vars(const MultiPoly& f, const MultiPoly& g) {
  return f.vars() == g.vars() || *f.vars() == *g.vars();
}

}  // namespace

std::shared_ptr<const Variables> Variables::of(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw Error("duplicate variable '" + names[i] + "'");
    }
  }
  return std::shared_ptr<const Variables>(new Variables(std::move(names)));
}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool grlex_greater(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  const std::uint32_t ta = total(a);
  const std::uint32_t tb = total(b);
  if (ta != tb) return ta > tb;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

VarList merge_variables(const VarList& lhs, const VarList& rhs) {
  if (lhs == rhs || *lhs == *rhs) return lhs;
  std::vector<std::string> names = lhs->names();
  for (const std::string& n : rhs->names()) {
    if (!lhs->index_of(n)) names.push_back(n);
  }
  if (names.size() == lhs->size()) return lhs;
  return Variables::of(std::move(names));
}

MultiPoly::MultiPoly() : vars_(empty_vars()) {}

MultiPoly::MultiPoly(VarList vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(VarList vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  canonicalize();
}

MultiPoly MultiPoly::constant(VarList vars, const Int& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back(Term{Exponents{}, c});
  return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::string_view name) {
  MultiPoly p(std::move(vars));
  Exponents e{};
  e[p.var_index(name)] = 1;
  p.terms_.push_back(Term{e, Int(1)});
  return p;
}

MultiPoly MultiPoly::monomial(VarList vars, const Exponents& exps, const Int& c) {
  MultiPoly p(std::move(vars));
  for (std::size_t i = p.vars_->size(); i < kMaxVars; ++i) {
    if (exps[i] != 0) throw Error("monomial uses an undeclared variable slot");
  }
  if (c != 0) p.terms_.push_back(Term{exps, c});
  return p;
}

void MultiPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

void MultiPoly::check_var(std::size_t var) const {
  if (var >= vars_->size()) throw Error("variable index out of range");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_[0].exps) == 0);
}

Int MultiPoly::constant_term() const {
  if (!terms_.empty() && total(terms_.back().exps) == 0) return terms_.back().coeff;
  return Int(0);
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error("the zero polynomial has no leading term");
  return terms_.front();
}

std::size_t MultiPoly::var_index(std::string_view name) const {
  auto idx = vars_->index_of(name);
  if (!idx) throw UnboundVariable("unknown variable '" + std::string(name) + "'");
  return *idx;
}

bool MultiPoly::uses(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.exps[var] != 0; });
}

std::uint32_t MultiPoly::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exps[var]);
  return d;
}

std::uint32_t MultiPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().exps[var];
  for (const Term& t : terms_) d = std::min(d, t.exps[var]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : total(terms_.front().exps);
}

Int MultiPoly::content() const {
  Int g = 0;
  for (const Term& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (!same_vars(*this, rhs)) {
    auto [f, g] = unify(*this, rhs);
    return *this = f += g;
  }
  if (rhs.terms_.empty()) return *this;
  if (&rhs == this) return *this *= Int(2);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && grlex_greater(i->exps, j->exps))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || grlex_greater(j->exps, i->exps)) {
      out.push_back(*j++);
    } else {
      Int c = i->coeff + j->coeff;
      if (c != 0) out.push_back(Term{i->exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (!same_vars(lhs, rhs)) {
    auto [f, g] = unify(lhs, rhs);
    return f * g;
  }
  if (lhs.is_zero() || rhs.is_zero()) return MultiPoly(lhs.vars_);
  if (rhs.terms_.size() == 1) {
    MultiPoly r = lhs.shift(rhs.terms_[0].exps);
    return r *= rhs.terms_[0].coeff;
  }
  if (lhs.terms_.size() == 1) return rhs * lhs;
  std::unordered_map<MultiPoly::Exponents, Int, ExponentsHash> acc;
  acc.reserve(lhs.terms_.size() * rhs.terms_.size() / 2 + 16);
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      Int& slot = acc[add_exps(a.exps, b.exps)];
      mpz_addmul(slot.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    }
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) terms.push_back(MultiPoly::Term{e, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return grlex_greater(a.exps, b.exps);
  });
  MultiPoly r(lhs.vars_);
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (!same_vars(lhs, rhs)) {
    auto [f, g] = unify(lhs, rhs);
    return f == g;
  }
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].exps != rhs.terms_[i].exps || lhs.terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, Int(1));
  MultiPoly square = *this;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = result * square;
    exponent >>= 1U;
    if (exponent != 0) square = square * square;
  }
  return result;
}

MultiPoly MultiPoly::shift(const Exponents& exps) const {
  MultiPoly r(*this);
  for (Term& t : r.terms_) t.exps = add_exps(t.exps, exps);
  return r;
}

MultiPoly MultiPoly::divide_coefficients(const Int& c) const {
  if (c == 0) throw DivisionByZero("coefficient division by zero");
  MultiPoly r(*this);
  for (Term& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw NotExactlyDivisible("coefficient " + edp::to_string(t.coeff) + " is not divisible by " +
                                edp::to_string(c));
    }
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  check_var(var);
  std::vector<MultiPoly> out(degree(var) + 1, MultiPoly(vars_));
  for (const Term& t : terms_) {
    Term c = t;
    c.exps[var] = 0;
    out[t.exps[var]].terms_.push_back(std::move(c));
  }
  for (MultiPoly& p : out) p.canonicalize();
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs, VarList vars,
                                       std::size_t var) {
  MultiPoly r(vars);
  r.check_var(var);
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    MultiPoly c = coeffs[e].with_variables(vars);
    for (const Term& t : c.terms_) {
      if (t.exps[var] != 0) throw Error("coefficient depends on the main variable");
      Term s = t;
      s.exps[var] = static_cast<std::uint32_t>(e);
      terms.push_back(std::move(s));
    }
  }
  return MultiPoly(std::move(vars), std::move(terms));
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  check_var(var);
  std::vector<MultiPoly> coeffs = coefficients_in(var);
  MultiPoly v = value.with_variables(merge_variables(vars_, value.vars()));
  MultiPoly acc(v.vars());
  for (std::size_t e = coeffs.size(); e-- > 0;) {
    acc = acc * v + coeffs[e];
  }
  return acc;
}

MultiPoly MultiPoly::rename(const std::map<std::string, std::string>& mapping) const {
  std::vector<std::string> names = vars_->names();
  for (std::string& n : names) {
    auto it = mapping.find(n);
    if (it != mapping.end()) n = it->second;
  }
  // A permutation keeps this polynomial's variable order so printing stays
  // comparable; a renaming to new names uses the renamed list.
  VarList renamed = Variables::of(names);
  MultiPoly tmp(renamed);
  tmp.terms_ = terms_;
  std::vector<std::string> before = vars_->names();
  std::sort(names.begin(), names.end());
  std::sort(before.begin(), before.end());
  if (names != before) {
    tmp.canonicalize();
    return tmp;
  }
  return tmp.with_variables(vars_);
}

MultiPoly MultiPoly::reduce_mod(const Int& p) const {
  MultiPoly r(vars_);
  for (const Term& t : terms_) {
    Int c;
    mpz_fdiv_r(c.get_mpz_t(), t.coeff.get_mpz_t(), p.get_mpz_t());
    if (c != 0) r.terms_.push_back(Term{t.exps, std::move(c)});
  }
  return r;
}

MultiPoly MultiPoly::with_variables(const VarList& vars) const {
  if (vars == vars_ || *vars == *vars_) {
    MultiPoly r(*this);
    r.vars_ = vars;
    return r;
  }
  std::array<std::size_t, kMaxVars> target{};
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto idx = vars->index_of(vars_->name(i));
    if (idx) {
      target[i] = *idx;
    } else if (uses(i)) {
      throw UnboundVariable("variable '" + vars_->name(i) + "' missing from target list");
    } else {
      target[i] = kMaxVars;
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term s{Exponents{}, t.coeff};
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (t.exps[i] != 0) s.exps[target[i]] = t.exps[i];
    }
    terms.push_back(std::move(s));
  }
  return MultiPoly(vars, std::move(terms));
}

Fp MultiPoly::evaluate(const std::map<std::string, Fp>& bindings) const {
  std::optional<Fp> like;
  std::vector<Fp> values;
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    auto it = bindings.find(vars_->name(v));
    if (it == bindings.end()) {
      if (uses(v)) throw UnboundVariable("no value bound for '" + vars_->name(v) + "'");
      continue;
    }
    if (!like) like = it->second;
  }
  if (!like) {
    if (bindings.empty()) throw UnboundVariable("evaluation needs at least one binding");
    like = bindings.begin()->second;
  }
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    auto it = bindings.find(vars_->name(v));
    values.push_back(it == bindings.end() ? like->from_int(Int(0)) : it->second);
  }
  for (const auto& [name, value] : bindings) {
    if (value.modulus() != like->modulus()) throw FieldMismatch("bindings use different moduli");
  }
  return evaluate(values, *like);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    Int magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(i);
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

MultiPoly build(const Expr& e, const VarList& vars) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return MultiPoly::constant(vars, e.number);
    case Expr::Kind::Variable:
      return MultiPoly::variable(vars, e.name);
    case Expr::Kind::Neg:
      return -build(*e.lhs, vars);
    case Expr::Kind::Add:
      return build(*e.lhs, vars) + build(*e.rhs, vars);
    case Expr::Kind::Sub:
      return build(*e.lhs, vars) - build(*e.rhs, vars);
    case Expr::Kind::Mul:
      return build(*e.lhs, vars) * build(*e.rhs, vars);
    case Expr::Kind::Div: {
      auto q = try_exact_div(build(*e.lhs, vars), build(*e.rhs, vars));
      if (!q) throw ParseError("division in a polynomial expression is not exact");
      return *q;
    }
    case Expr::Kind::Pow:
      return build(*e.lhs, vars).pow(e.exponent);
  }
  throw Error("unknown expression node");
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const VarList& vars) {
  ExprPtr e = parse_expression(text);
  VarList list = vars;
  if (!list) {
    std::set<std::string> ids = identifiers(*e);
    list = Variables::of(std::vector<std::string>(ids.begin(), ids.end()));
  } else {
    for (const std::string& id : identifiers(*e)) {
      if (!list->index_of(id)) throw ParseError("unknown variable '" + id + "'");
    }
  }
  return build(*e, list);
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const Term& t : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (t.exps[i] != 0) exps[vars_->name(i)] = t.exps[i];
    }
    out.push_back({{"coeff", t.coeff.get_str()}, {"exps", exps}});
  }
  return out;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j, const VarList& vars) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  VarList list = vars;
  if (!list) {
    std::set<std::string> names;
    for (const auto& term : j) {
      for (const auto& [name, value] : term.at("exps").items()) names.insert(name);
    }
    list = Variables::of(std::vector<std::string>(names.begin(), names.end()));
  }
  std::vector<Term> terms;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exps")) {
      throw ParseError("polynomial term needs 'coeff' and 'exps'");
    }
    Term t{Exponents{}, parse_int(term.at("coeff").get<std::string>())};
    for (const auto& [name, value] : term.at("exps").items()) {
      auto idx = list->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'");
      if (!value.is_number_unsigned()) throw ParseError("exponent must be a non-negative integer");
      t.exps[*idx] = value.get<std::uint32_t>();
    }
    terms.push_back(std::move(t));
  }
  return MultiPoly(list, std::move(terms));
}

std::optional<MultiPoly> try_exact_div(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!same_vars(f, g)) {
    auto [ff, gg] = unify(f, g);
    return try_exact_div(ff, gg);
  }
  if (f.is_zero()) return MultiPoly(f.vars());
  if (g.size() == 1) {
    const auto& lt = g.leading_term();
    std::vector<MultiPoly::Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (!divides(lt.exps, t.exps) || !mpz_divisible_p(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t())) {
        return std::nullopt;
      }
      Int c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
      terms.push_back(MultiPoly::Term{sub_exps(t.exps, lt.exps), std::move(c)});
    }
    return MultiPoly(f.vars(), std::move(terms));
  }
  if (f.total_degree() < g.total_degree()) return std::nullopt;

  // Remainder kept in a map ordered by the monomial order, so the leading
  // term is always at begin().
  std::map<MultiPoly::Exponents, Int, GrlexGreater> rem;
  for (const auto& t : f.terms()) rem.emplace_hint(rem.end(), t.exps, t.coeff);
  const auto& lt = g.leading_term();
  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(lt.exps, top->first) ||
        !mpz_divisible_p(top->second.get_mpz_t(), lt.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    MultiPoly::Term q{sub_exps(top->first, lt.exps), Int()};
    mpz_divexact(q.coeff.get_mpz_t(), top->second.get_mpz_t(), lt.coeff.get_mpz_t());
    for (const auto& t : g.terms()) {
      MultiPoly::Exponents e = add_exps(q.exps, t.exps);
      auto it = rem.find(e);
      if (it == rem.end()) {
        it = rem.emplace(e, Int(0)).first;
      }
      mpz_submul(it->second.get_mpz_t(), q.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(std::move(q));
  }
  return MultiPoly(f.vars(), std::move(quotient));
}

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_exact_div(f, g);
  if (!q) {
    throw NotExactlyDivisible("(" + f.to_string() + ") is not divisible by (" + g.to_string() + ")");
  }
  return *q;
}

// ---------------------------------------------------------------------------
// GCD over Z[vars]: integer content plus recursive primitive pseudo-remainder
// sequences, taking the highest-indexed variable in use as the main variable.

namespace {

std::optional<std::size_t> main_variable(const MultiPoly& f, const MultiPoly& g) {
  for (std::size_t v = f.vars()->size(); v-- > 0;) {
    if (f.uses(v) || g.uses(v)) return v;
  }
  return std::nullopt;
}

MultiPoly positive(MultiPoly p) {
  if (!p.is_zero() && p.leading_term().coeff < 0) return -p;
  return p;
}

MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g);

// Content with respect to `var`: gcd of the coefficients.
MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  std::vector<MultiPoly> coeffs = f.coefficients_in(var);
  std::sort(coeffs.begin(), coeffs.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return a.size() < b.size(); });
  MultiPoly c(f.vars());
  for (const MultiPoly& k : coeffs) {
    if (k.is_zero()) continue;
    c = gcd_rec(c, k);
    if (c.is_constant() && abs(c.constant_term()) == 1) break;
  }
  return c;
}

MultiPoly lead_coeff_in(const MultiPoly& f, std::size_t var) {
  return f.coefficients_in(var).back();
}

// Pseudo-remainder of a by b with respect to `var`.
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const std::uint32_t db = b.degree(var);
  const MultiPoly lb = lead_coeff_in(b, var);
  while (!a.is_zero() && a.degree(var) >= db) {
    const std::uint32_t da = a.degree(var);
    MultiPoly la = lead_coeff_in(a, var);
    MultiPoly::Exponents shift{};
    shift[var] = da - db;
    a = a * lb - (la * b).shift(shift);
  }
  return a;
}

MultiPoly primitive_in(const MultiPoly& f, std::size_t var) {
  MultiPoly c = content_in(f, var);
  if (c.is_constant() && abs(c.constant_term()) == 1) return f;
  return exact_div(f, c);
}

MultiPoly gcd_rec(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return positive(g);
  if (g.is_zero()) return positive(f);
  auto mv = main_variable(f, g);
  if (!mv) {
    Int c;
    mpz_gcd(c.get_mpz_t(), f.constant_term().get_mpz_t(), g.constant_term().get_mpz_t());
    return MultiPoly::constant(f.vars(), c);
  }
  const std::size_t v = *mv;
  if (!f.uses(v)) return gcd_rec(f, content_in(g, v));
  if (!g.uses(v)) return gcd_rec(content_in(f, v), g);

  MultiPoly cf = content_in(f, v);
  MultiPoly cg = content_in(g, v);
  MultiPoly c = gcd_rec(cf, cg);
  MultiPoly a = exact_div(f, cf);
  MultiPoly b = exact_div(g, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_rem(a, b, v);
    if (r.is_zero()) break;
    if (!r.uses(v)) {
      b = MultiPoly::constant(f.vars(), Int(1));
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v);
  }
  b = primitive_in(b, v);
  return positive(c * b);
}

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
  if (!same_vars(f, g)) {
    auto [ff, gg] = unify(f, g);
    return gcd(ff, gg);
  }
  if (f == g) return positive(f);
  return gcd_rec(f, g);
}

}  // namespace edp
