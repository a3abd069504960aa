#include "edp/edivpoly.hpp"

#include <bit>
#include <sstream>

namespace edp {

std::uint64_t m_of(unsigned n) {
  const std::uint64_t sq = static_cast<std::uint64_t>(n) * n;
  if (n == 0) return 0;
  return n % 2 == 1 ? (sq - 1) / 2 : (sq - 2) / 2;
}

std::uint64_t k_of(unsigned n) { return 3 * static_cast<std::uint64_t>(n) * n / 8; }

unsigned gamma_of(unsigned n) { return n % 2 == 0 ? 1 : 0; }

Rational delta_of(unsigned n) {
  if (n == 0) throw InvalidArgument("delta(n) needs n >= 1");
  switch (n % 8) {
    case 0: return Rational(n / 2);
    case 4: return Rational(-static_cast<long>(n / 2));
    case 1:
    case 2:
    case 5: return Rational(1);
    default: return Rational(-1);
  }
}

Rational epsilon_of(unsigned n) {
  if (n == 0) throw InvalidArgument("epsilon(n) needs n >= 1");
  switch (n % 8) {
    case 0: return Rational(-static_cast<long>(n / 2));
    case 4: return Rational(n / 2);
    case 1:
    case 2:
    case 3: return Rational(1);
    default: return Rational(-1);
  }
}

const VarList& psi_tilde_variables() {
  static const VarList vars = Variables::of({"a", "d", "y"});
  return vars;
}

const PsiTildeBases& PsiTildeBases::standard() {
  static const PsiTildeBases bases = [] {
    const VarList& v = psi_tilde_variables();
    return PsiTildeBases{{MultiPoly(v), MultiPoly::constant(v, Int(1)), MultiPoly::parse("y + 1", v),
                          MultiPoly::parse("-d*y^4 - 2*d*y^3 + 2*a*y + a", v),
                          MultiPoly::parse("-2*d*y^6 - 2*d*y^5 + 2*a*y^2 + 2*a*y", v)}};
  }();
  return bases;
}

PsiTildeBases PsiTildeBases::corrupted() {
  PsiTildeBases bases = standard();
  bases.polys[3] += MultiPoly::variable(psi_tilde_variables(), "y");
  return bases;
}

MultiPoly divide_by_y_plus_one(const MultiPoly& f, unsigned times) {
  const std::size_t y = f.var_index("y");
  std::vector<MultiPoly> c = f.coefficients_in(y);
  for (unsigned t = 0; t < times; ++t) {
    if (c.empty()) break;
    // Synthetic division by y + 1 from the top coefficient down.
    std::vector<MultiPoly> q(c.size() - 1, MultiPoly(f.vars()));
    MultiPoly carry(f.vars());
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] - carry;
      q[i - 1] = carry;
    }
    if (!(c[0] == carry)) throw NotExactlyDivisible("(y+1) does not divide the polynomial");
    c = std::move(q);
  }
  return MultiPoly::from_coefficients(c, f.vars(), y);
}

namespace {

// One step of the psi~ recursion for index n >= 5, written once for any ring
// that supplies the curve constants and division by (y+1)^k.
template <class Ring, class Table>
typename Ring::Value psi_tilde_step(const Ring& ring, const Table& t, unsigned n) {
  using V = typename Ring::Value;
  const unsigned r = n / 2;
  if (n % 2 == 1) {
    V up = t[r + 2] * t[r] * t[r] * t[r];
    V down = t[r - 1] * t[r + 1] * t[r + 1] * t[r + 1];
    switch (r % 4) {
      case 0: return ring.div_y1(ring.c4_ad * up, 2) - down;
      case 1: return up - ring.div_y1(ring.c4 * down, 2);
      case 2: return ring.div_y1(ring.c4 * up, 2) - down;
      default: return up - ring.div_y1(ring.c4_ad * down, 2);
    }
  }
  V first = t[r + 2] * t[r - 1] * t[r - 1];
  V second = t[r - 2] * t[r + 1] * t[r + 1];
  if (r % 4 == 1) first = ring.a_minus_d * first;
  if (r % 4 == 3) second = ring.a_minus_d * second;
  return ring.div_y1(t[r] * (first - second), 1);
}

struct SymbolicRing {
  using Value = MultiPoly;
  MultiPoly a_minus_d;
  MultiPoly c4;
  MultiPoly c4_ad;

  SymbolicRing() {
    const VarList& v = psi_tilde_variables();
    a_minus_d = MultiPoly::parse("a - d", v);
    c4 = MultiPoly::parse("4*(a - d*y^2)^2", v);
    c4_ad = a_minus_d * c4;
  }
  MultiPoly div_y1(const MultiPoly& f, unsigned times) const { return divide_by_y_plus_one(f, times); }
};

// Truncated power series in e = y - y0 with a fixed number of coefficients.
class Series {
 public:
  Series(std::vector<Fp> c) : c_(std::move(c)) {}
  static Series constant(const Fp& v, std::size_t len) {
    std::vector<Fp> c(len, v.from_int(Int(0)));
    c[0] = v;
    return Series(std::move(c));
  }
  const Fp& head() const { return c_[0]; }

  friend Series operator+(const Series& f, const Series& g) {
    std::vector<Fp> c = f.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + g.c_[i];
    return Series(std::move(c));
  }
  friend Series operator-(const Series& f, const Series& g) {
    std::vector<Fp> c = f.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - g.c_[i];
    return Series(std::move(c));
  }
  friend Series operator*(const Series& f, const Series& g) {
    const std::size_t len = f.c_.size();
    if (len == 1) return Series({f.c_[0] * g.c_[0]});
    std::vector<Fp> c(len, f.c_[0].from_int(Int(0)));
    for (std::size_t i = 0; i < len; ++i) {
      if (f.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < len; ++j) c[i + j] = c[i + j] + f.c_[i] * g.c_[j];
    }
    return Series(std::move(c));
  }

  // Divides by (c0 + e)^times.
  Series divide_linear(const Fp& c0, unsigned times) const {
    std::vector<Fp> c = c_;
    const std::size_t len = c.size();
    for (unsigned t = 0; t < times; ++t) {
      if (c0.is_zero()) {
        if (!c[0].is_zero()) throw NotExactlyDivisible("(y+1) does not divide the series");
        for (std::size_t i = 0; i + 1 < len; ++i) c[i] = c[i + 1];
        c[len - 1] = c0;
      } else {
        // q_i = (c_i - q_{i-1}) / c0.
        const Fp inv = c0.inverse();
        Fp prev = c0;
        for (std::size_t i = 0; i < len; ++i) {
          c[i] = (i == 0 ? c[i] : c[i] - prev) * inv;
          prev = c[i];
        }
      }
    }
    return Series(std::move(c));
  }

 private:
  std::vector<Fp> c_;
};

struct NumericRing {
  using Value = Series;
  Fp y_plus_one;
  Series a_minus_d;
  Series c4;
  Series c4_ad;

  NumericRing(const Fp& a, const Fp& d, const Series& y, const Fp& y0, std::size_t len)
      : y_plus_one(y0 + y0.from_int(Int(1))),
        a_minus_d(Series::constant(a - d, len)),
        c4(Series::constant(a, len)),
        c4_ad(Series::constant(a, len)) {
    Series s = Series::constant(a, len) - Series::constant(d, len) * y * y;
    c4 = Series::constant(from_int(a, 4), len) * s * s;
    c4_ad = a_minus_d * c4;
  }
  Series div_y1(const Series& f, unsigned times) const { return f.divide_linear(y_plus_one, times); }
};

struct SlotView {
  const std::vector<std::unique_ptr<const MultiPoly>>& slots;
  const MultiPoly& operator[](std::size_t i) const { return *slots[i]; }
};

}  // namespace

PsiTildeTable::PsiTildeTable(const PsiTildeBases& bases) : bases_(bases) {
  table_.reserve(kMaxIndex + 1);
  for (const MultiPoly& b : bases_.polys) {
    table_.push_back(std::make_unique<const MultiPoly>(b.with_variables(psi_tilde_variables())));
  }
  size_.store(static_cast<unsigned>(table_.size()), std::memory_order_release);
}

PsiTildeTable& PsiTildeTable::standard() {
  static PsiTildeTable table;
  return table;
}

void PsiTildeTable::extend_locked(unsigned n) {
  static const SymbolicRing ring;
  if (n > kMaxIndex) throw InvalidArgument("psi~ index exceeds the symbolic table limit");
  while (table_.size() <= n) {
    const unsigned next = static_cast<unsigned>(table_.size());
    table_.push_back(std::make_unique<const MultiPoly>(psi_tilde_step(ring, SlotView{table_}, next)));
    size_.store(static_cast<unsigned>(table_.size()), std::memory_order_release);
  }
}

const MultiPoly& PsiTildeTable::get(unsigned n) {
  if (n < precomputed()) return *table_[n];
  std::lock_guard<std::mutex> lock(mutex_);
  extend_locked(n);
  return *table_[n];
}

void PsiTildeTable::precompute(unsigned n_max) { get(n_max); }

const MultiPoly& PsiTildeTable::at(unsigned n) const {
  if (n >= precomputed()) throw InvalidArgument("psi~ index beyond the precomputed range");
  return *table_[n];
}

std::string PsiForm::to_string() const {
  std::ostringstream out;
  if (kpow != 0) out << "(a - d)^" << kpow << " * ";
  out << "(" << core.to_string() << ")";
  if (xpow != 0 || mpow != 0) {
    out << " / (";
    if (xpow != 0) out << "x";
    if (xpow != 0 && mpow != 0) out << " * ";
    if (mpow != 0) out << "(2*(1 - y))^" << mpow;
    out << ")";
  }
  return out.str();
}

PsiForm psi_form(unsigned n) { return PsiForm{n, k_of(n), m_of(n), gamma_of(n), psi_tilde(n)}; }

std::vector<Fp> psi_tilde_values(const Fp& a, const Fp& d, const Fp& y, unsigned n_max,
                                 const PsiTildeBases& bases) {
  const Fp one = y.from_int(Int(1));
  const bool singular = (y + one).is_zero();
  // Each halving of the index costs at most two orders of precision at y = -1.
  const std::size_t len = singular ? 2 * static_cast<std::size_t>(std::bit_width(n_max)) + 3 : 1;
  std::vector<Fp> ys(len, y.from_int(Int(0)));
  ys[0] = y;
  if (len > 1) ys[1] = one;
  const Series ys_series(ys);
  const NumericRing ring(a, d, ys_series, y, len);

  std::vector<Series> t;
  t.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n < bases.polys.size()) {
      // Taylor coefficients of a base polynomial: evaluate its y-coefficients
      // and expand around y0.
      std::vector<MultiPoly> coeffs = bases.polys[n].with_variables(psi_tilde_variables()).coefficients_in(2);
      std::vector<Fp> values;
      for (const MultiPoly& c : coeffs) values.push_back(c.evaluate(std::vector<Fp>{a, d, y}, y));
      Series s = Series::constant(y.from_int(Int(0)), len);
      for (std::size_t i = values.size(); i-- > 0;) s = s * ys_series + Series::constant(values[i], len);
      t.push_back(std::move(s));
    } else {
      t.push_back(psi_tilde_step(ring, t, n));
    }
  }
  std::vector<Fp> out;
  out.reserve(t.size());
  for (const Series& s : t) out.push_back(s.head());
  return out;
}

std::vector<Fp> psi_values(const FpCurve& curve, const FpPoint& p, unsigned n_max,
                           const PsiTildeBases& bases) {
  const Fp one = curve.one();
  if (p.x.is_zero() || p.y == one) throw UndefinedAtPoint("psi_n is not defined at (0, 1) or (0, -1)");
  std::vector<Fp> core = psi_tilde_values(curve.a(), curve.d(), p.y, n_max, bases);
  const Fp a_minus_d = curve.a() - curve.d();
  const Fp two_one_minus_y = from_int(one, 2) * (one - p.y);
  std::vector<Fp> out;
  out.reserve(core.size());
  for (unsigned n = 0; n <= n_max; ++n) {
    Fp den = power(two_one_minus_y, m_of(n));
    if (gamma_of(n) == 1) den = den * p.x;
    out.push_back(power(a_minus_d, k_of(n)) * core[n] / den);
  }
  return out;
}

PhiOmegaPsi phi_omega_eval(const FpCurve& curve, const FpPoint& p, unsigned n,
                           const PsiTildeBases& bases) {
  if (n == 0) throw InvalidArgument("phi_n and omega_n need n >= 1");
  std::vector<Fp> psi = psi_values(curve, p, 2 * n, bases);
  const Fp one = curve.one();
  const Fp a_minus_d = curve.a() - curve.d();
  Fp phi = (one + p.y) * psi[n] * psi[n] / (one - p.y) -
           from_int(one, 4) * psi[n - 1] * psi[n + 1] / a_minus_d;
  if (psi[n].is_zero()) throw TorsionDenominator("psi_n(P) = 0: omega_n divides by zero");
  Fp omega = from_int(one, 2) * psi[2 * n] / (a_minus_d * psi[n]);
  return PhiOmegaPsi{std::move(phi), std::move(omega), psi[n]};
}

FpPoint edwards_mul_divpoly(const FpCurve& curve, const FpPoint& p, unsigned n,
                            const PsiTildeBases& bases) {
  const Fp one = curve.one();
  if (n == 0 || curve.is_identity(p)) return curve.identity();
  if (p.x.is_zero()) return n % 2 == 0 ? curve.identity() : p;
  std::vector<Fp> psi = psi_values(curve, p, 2 * n, bases);
  if (psi[n].is_zero()) return curve.identity();
  const Fp a_minus_d = curve.a() - curve.d();
  const Fp psi2 = psi[n] * psi[n];
  Fp phi = (one + p.y) * psi2 / (one - p.y) - from_int(one, 4) * psi[n - 1] * psi[n + 1] / a_minus_d;
  Fp omega = from_int(one, 2) * psi[2 * n] / (a_minus_d * psi[n]);
  Fp den_y = phi + psi2;
  if (den_y.is_zero()) throw ExceptionalDenominator("phi_n + psi_n^2 vanishes: [n]P is not affine");
  Fp y = (phi - psi2) / den_y;
  if (omega.is_zero()) {
    if (y == -one) return FpPoint{curve.zero(), y};
    throw ExceptionalDenominator("omega_n vanishes: [n]P is not affine");
  }
  return FpPoint{phi * psi[n] / omega, std::move(y)};
}

TorsionVerdict is_n_torsion(const FpCurve& curve, const FpPoint& p, unsigned n,
                            const PsiTildeBases& bases) {
  return torsion_verdicts(curve, p, n, bases)[n];
}

std::vector<TorsionVerdict> torsion_verdicts(const FpCurve& curve, const FpPoint& p, unsigned n_max,
                                             const PsiTildeBases& bases) {
  std::vector<TorsionVerdict> out;
  out.reserve(n_max + 1);
  if (curve.is_identity(p)) {
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(TorsionVerdict{p, n, true, curve.zero()});
    return out;
  }
  std::vector<Fp> witness = psi_tilde_values(curve.a(), curve.d(), p.y, n_max, bases);
  for (unsigned n = 0; n <= n_max; ++n) {
    out.push_back(TorsionVerdict{p, n, witness[n].is_zero(), witness[n]});
  }
  return out;
}

namespace {

std::size_t var(const MultiPoly& f, const char* name) { return f.var_index(name); }

MultiPoly reduce(const MultiPoly& f, const Int& modulus) {
  return modulus == 0 ? f : f.reduce_mod(modulus);
}

bool degenerate(unsigned n, const Int& modulus) {
  return modulus != 0 && Int(n) % (4 * modulus) == 0;
}

// delta(n) or epsilon(n) times the monomial c^(m-k) as an integer polynomial.
MultiPoly scaled_power(const Rational& factor, const char* name, std::uint64_t exponent) {
  if (factor.get_den() != 1) throw InvalidArgument("sign factor is not integral");
  const VarList& v = psi_tilde_variables();
  return MultiPoly::variable(v, name).pow(static_cast<unsigned>(exponent)) * Int(factor.get_num());
}

std::string describe(const MultiPoly& f) {
  std::string s = f.to_string();
  return s.size() > 200 ? s.substr(0, 200) + "..." : s;
}

std::string modulus_suffix(const Int& modulus) {
  return modulus == 0 ? "" : " mod " + edp::to_string(modulus);
}

}  // namespace

CheckReport check_integrality(unsigned n, PsiTildeTable& table) {
  CheckReport report{"integrality", n, false, ""};
  try {
    const MultiPoly& f = table.get(n);
    report.pass = true;
    report.detail = "recursion divisions exact, " + std::to_string(f.size()) + " integer terms";
  } catch (const NotExactlyDivisible& e) {
    report.detail = e.what();
  }
  return report;
}

CheckReport check_leading(unsigned n, const Int& modulus, PsiTildeTable& table) {
  CheckReport report{"leading term", n, false, ""};
  const MultiPoly f = reduce(table.get(n), modulus);
  const std::size_t y = var(f, "y");
  const std::uint64_t m = m_of(n);
  if (f.is_zero()) {
    report.pass = n == 0;
    report.detail = "psi~ is zero";
    return report;
  }
  std::vector<MultiPoly> c = f.coefficients_in(y);
  const std::uint64_t deg = c.size() - 1;
  if (degenerate(n, modulus)) {
    report.pass = deg + 1 < m;
    report.detail = "degree " + std::to_string(deg) + " < m(n)-1 = " + std::to_string(m - 1) +
                    modulus_suffix(modulus);
    return report;
  }
  const std::uint64_t want_deg = n % 4 == 0 ? m - 1 : m;
  MultiPoly want = reduce(scaled_power(delta_of(n), "d", m - k_of(n)), modulus);
  report.pass = deg == want_deg && c.back() == want;
  report.detail = "got (" + describe(c.back()) + ")*y^" + std::to_string(deg) + ", want (" +
                  describe(want) + ")*y^" + std::to_string(want_deg) + modulus_suffix(modulus);
  return report;
}

CheckReport check_trailing(unsigned n, const Int& modulus, PsiTildeTable& table) {
  CheckReport report{"trailing term", n, false, ""};
  const MultiPoly f = reduce(table.get(n), modulus);
  if (f.is_zero()) {
    report.pass = n == 0;
    report.detail = "psi~ is zero";
    return report;
  }
  const std::size_t y = var(f, "y");
  std::vector<MultiPoly> c = f.coefficients_in(y);
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  if (degenerate(n, modulus)) {
    report.pass = low > 1;
    report.detail = "least degree " + std::to_string(low) + " > 1" + modulus_suffix(modulus);
    return report;
  }
  const std::size_t want_low = n % 4 == 0 ? 1 : 0;
  MultiPoly want = reduce(scaled_power(epsilon_of(n), "a", m_of(n) - k_of(n)), modulus);
  report.pass = low == want_low && c[low] == want;
  report.detail = "got (" + describe(c[low]) + ")*y^" + std::to_string(low) + ", want (" +
                  describe(want) + ")*y^" + std::to_string(want_low) + modulus_suffix(modulus);
  return report;
}

CheckReport check_degree(unsigned n, const Int& modulus, PsiTildeTable& table) {
  CheckReport report{"degree", n, false, ""};
  const MultiPoly f = reduce(table.get(n), modulus);
  const std::uint64_t deg = f.degree(var(f, "y"));
  const std::uint64_t m = m_of(n);
  if (degenerate(n, modulus)) {
    report.pass = deg + 1 < m;
    report.detail = "degree " + std::to_string(deg) + " < " + std::to_string(m - 1);
  } else {
    const std::uint64_t want = n % 4 == 0 ? m - 1 : m;
    report.pass = n == 0 ? f.is_zero() : deg == want;
    report.detail = "degree " + std::to_string(deg) + ", want " + std::to_string(want);
  }
  report.detail += modulus_suffix(modulus);
  return report;
}

MultiPoly star_involution(const MultiPoly& f, unsigned n) {
  const MultiPoly g = f.with_variables(psi_tilde_variables());
  const std::uint64_t m = m_of(n);
  if (g.degree(2) > m) throw InvalidArgument("polynomial degree in y exceeds m(n)");
  std::vector<MultiPoly::Term> terms;
  terms.reserve(g.size());
  for (const MultiPoly::Term& t : g.terms()) {
    MultiPoly::Term s;
    s.exps[0] = t.exps[1];
    s.exps[1] = t.exps[0];
    s.exps[2] = static_cast<std::uint32_t>(m - t.exps[2]);
    s.coeff = (t.exps[0] + t.exps[1]) % 2 == 0 ? t.coeff : Int(-t.coeff);
    terms.push_back(std::move(s));
  }
  return MultiPoly(psi_tilde_variables(), std::move(terms));
}

CheckReport check_symmetry(unsigned n, PsiTildeTable& table) {
  CheckReport report{"symmetry", n, false, ""};
  const MultiPoly& f = table.get(n);
  try {
    MultiPoly g = star_involution(f, n);
    report.pass = g == f;
    report.detail = report.pass ? "psi~ fixed by the star involution" : "differs: " + describe(g - f);
  } catch (const InvalidArgument& e) {
    report.detail = e.what();
  }
  return report;
}

CheckReport check_homogeneity(unsigned n, PsiTildeTable& table) {
  CheckReport report{"homogeneity", n, true, ""};
  const MultiPoly& f = table.get(n);
  const std::uint64_t want = m_of(n) - k_of(n);
  for (const MultiPoly::Term& t : f.terms()) {
    if (t.exps[0] + t.exps[1] != want) {
      report.pass = false;
      report.detail = "term of (a,d)-degree " + std::to_string(t.exps[0] + t.exps[1]);
      return report;
    }
  }
  report.detail = "every coefficient has (a,d)-degree " + std::to_string(want);
  return report;
}

CheckReport check_even_factor(unsigned n, PsiTildeTable& table) {
  CheckReport report{"even factor", n, false, ""};
  if (n % 2 == 1) throw InvalidArgument("the (y+1) factor check needs even n");
  try {
    MultiPoly q = divide_by_y_plus_one(table.get(n));
    report.pass = true;
    report.detail = "quotient " + describe(q);
  } catch (const NotExactlyDivisible& e) {
    report.detail = e.what();
  }
  return report;
}

}  // namespace edp
