#include "edp/altrec.hpp"

namespace edp {

const VarList& pq_variables() {
  static const VarList vars = Variables::of({"a", "d", "t"});
  return vars;
}

namespace {

MultiPoly constant_poly(long v) { return MultiPoly::constant(pq_variables(), Int(v)); }

}  // namespace

PQTable::PQTable() {
  table_.reserve(kMaxIndex + 1);
  const VarList& v = pq_variables();
  table_.push_back(std::make_unique<const PQPair>(PQPair{0, MultiPoly(v), constant_poly(1)}));
  table_.push_back(std::make_unique<const PQPair>(PQPair{1, constant_poly(1), constant_poly(1)}));
  table_.push_back(std::make_unique<const PQPair>(
      PQPair{2, MultiPoly::parse("2*(1 - d*t)", v), MultiPoly::parse("1 - a*d*t^2", v)}));
  size_.store(3, std::memory_order_release);
}

PQTable& PQTable::standard() {
  static PQTable table;
  return table;
}

const PQPair& PQTable::get(unsigned n) {
  if (n == 0 || n > kMaxIndex) throw InvalidArgument("pq_pair index must lie in 1..7");
  if (n < size_.load(std::memory_order_acquire)) return *table_[n];
  std::lock_guard<std::mutex> lock(mutex_);
  const VarList& v = pq_variables();
  const MultiPoly one_at = MultiPoly::parse("1 - a*t", v);
  const MultiPoly one_dt = MultiPoly::parse("1 - d*t", v);
  const MultiPoly adt2 = MultiPoly::parse("a*d*t^2", v);
  const MultiPoly two = constant_poly(2);
  while (table_.size() <= n) {
    const unsigned k = static_cast<unsigned>(table_.size()) - 1;
    const PQPair& cur = *table_[k];
    const PQPair& prev = *table_[k - 1];
    MultiPoly p_next(v);
    MultiPoly q_next(v);
    if (k % 2 == 0) {
      MultiPoly common = one_dt * cur.Q * cur.Q - adt2 * one_at * cur.P * cur.P;
      p_next = two * one_at * one_dt * cur.P * prev.Q * cur.Q - prev.P * common;
      q_next = prev.Q * common;
    } else {
      MultiPoly common = cur.Q * cur.Q - adt2 * cur.P * cur.P;
      p_next = two * one_dt * cur.P * prev.Q * cur.Q - prev.P * common;
      q_next = prev.Q * common;
    }
    table_.push_back(std::make_unique<const PQPair>(PQPair{k + 1, std::move(p_next), std::move(q_next)}));
    size_.store(static_cast<unsigned>(table_.size()), std::memory_order_release);
  }
  return *table_[n];
}

std::vector<std::pair<Fp, Fp>> pq_values(const Fp& a, const Fp& d, const Fp& t, unsigned n_max) {
  const Fp one = a.from_int(Int(1));
  const Fp two = a.from_int(Int(2));
  const Fp one_at = one - a * t;
  const Fp one_dt = one - d * t;
  const Fp adt2 = a * d * t * t;
  std::vector<std::pair<Fp, Fp>> out{{a.from_int(Int(0)), one}, {one, one}, {two * one_dt, one - adt2}};
  for (unsigned k = 2; k < n_max; ++k) {
    const auto& [pn, qn] = out[k];
    const auto& [pp, qp] = out[k - 1];
    if (k % 2 == 0) {
      Fp common = one_dt * qn * qn - adt2 * one_at * pn * pn;
      out.emplace_back(two * one_at * one_dt * pn * qp * qn - pp * common, qp * common);
    } else {
      Fp common = qn * qn - adt2 * pn * pn;
      out.emplace_back(two * one_dt * pn * qp * qn - pp * common, qp * common);
    }
  }
  out.resize(n_max + 1, out.front());
  return out;
}

std::vector<Fp> alt_x_multiples(const FpCurve& curve, const FpPoint& p, unsigned n_max) {
  std::vector<std::pair<Fp, Fp>> pq = pq_values(curve.a(), curve.d(), p.x * p.x, n_max);
  std::vector<Fp> out{curve.zero()};
  out.reserve(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto& [pn, qn] = pq[n];
    if (qn.is_zero()) throw TorsionDenominator("Q_n(x^2) vanishes at n = " + std::to_string(n));
    Fp scale = n % 2 == 0 ? p.x * p.y : p.x;
    out.push_back(scale * pn / qn);
  }
  return out;
}

Fp alt_x_multiple(const FpCurve& curve, const FpPoint& p, unsigned n) {
  if (n == 0) return curve.zero();
  std::vector<std::pair<Fp, Fp>> pq = pq_values(curve.a(), curve.d(), p.x * p.x, n);
  const auto& [pn, qn] = pq[n];
  if (qn.is_zero()) throw TorsionDenominator("Q_n(x^2) vanishes at n = " + std::to_string(n));
  Fp scale = n % 2 == 0 ? p.x * p.y : p.x;
  return scale * pn / qn;
}

Fp alpha_eval(unsigned n, const Fp& t, const Fp& a, const Fp& d) {
  if (n == 0) throw InvalidArgument("alpha_n needs n >= 1");
  const Fp one = a.from_int(Int(1));
  const Fp two = a.from_int(Int(2));
  const Fp one_at = one - a * t;
  const Fp one_dt = one - d * t;
  const Fp adt2 = a * d * t * t;
  if (n == 1) return one;
  Fp prev = one;
  Fp den2 = one - adt2;
  if (den2.is_zero()) throw ExceptionalDenominator("alpha_2 denominator vanishes", 2);
  Fp cur = two * one_dt / den2;
  for (unsigned k = 2; k < n; ++k) {
    Fp next = cur;
    if (k % 2 == 0) {
      Fp den = one_dt - adt2 * one_at * cur * cur;
      if (den.is_zero()) throw ExceptionalDenominator("alpha recursion denominator vanishes", k + 1);
      next = two * one_at * one_dt * cur / den - prev;
    } else {
      Fp den = one - adt2 * cur * cur;
      if (den.is_zero()) throw ExceptionalDenominator("alpha recursion denominator vanishes", k + 1);
      next = two * one_dt * cur / den - prev;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Fp recover_y(const FpCurve& curve, const Fp& x, const Fp& y, const Fp& x_n, const Fp& x_prev) {
  const Fp one = curve.one();
  const Fp& a = curve.a();
  const Fp& d = curve.d();
  const Fp x2 = x * x;
  Fp den = x * (one - d * x_n * x_n);
  if (den.is_zero()) throw ExceptionalDenominator("x (1 - d x_n^2) vanishes");
  return (x_n * y * (one - d * x2) - x_prev * (one - a * d * x2 * x_n * x_n)) / den;
}

Fp recover_x(const FpCurve& curve, const Fp& x, const Fp& y, const Fp& y_n, const Fp& y_prev) {
  const Fp& a = curve.a();
  const Fp& d = curve.d();
  const Fp y2 = y * y;
  const Fp yn2 = y_n * y_n;
  Fp den = x * (a - d * y2) * (a - d * yn2);
  if (den.is_zero()) throw ExceptionalDenominator("x (a - d y^2)(a - d y_n^2) vanishes");
  return (y_prev * (a - d * (y2 + yn2) + d * y2 * yn2) - (a - d) * y * y_n) / den;
}

FpPoint altrec_mul(const FpCurve& curve, const FpPoint& p, unsigned n) {
  if (n == 0 || curve.is_identity(p)) return curve.identity();
  if (p.x.is_zero()) return n % 2 == 0 ? curve.identity() : p;
  std::vector<Fp> xs = alt_x_multiples(curve, p, n);
  return FpPoint{xs[n], recover_y(curve, p.x, p.y, xs[n], xs[n - 1])};
}

std::vector<FpPoint> x_only_ladder(const FpCurve& curve, const FpPoint& p, unsigned n_max) {
  std::vector<FpPoint> out;
  out.reserve(n_max);
  if (p.x.is_zero()) {
    for (unsigned n = 1; n <= n_max; ++n) out.push_back(altrec_mul(curve, p, n));
    return out;
  }
  std::vector<Fp> xs = alt_x_multiples(curve, p, n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    out.push_back(FpPoint{xs[n], recover_y(curve, p.x, p.y, xs[n], xs[n - 1])});
  }
  return out;
}

}  // namespace edp
