#include "edp/curves/prime_curves.hpp"

namespace edp {

FpCurve make_curve(const Int& a, const Int& d, const Int& p) {
  FieldPtr field = PrimeField::create(p);
  return FpCurve(Fp(field, a), Fp(field, d));
}

bool is_complete(const FpCurve& curve) { return !(curve.a() * curve.d()).is_square(); }

bool has_complete_addition(const FpCurve& curve) {
  return curve.a().is_square() && !curve.d().is_square();
}

std::vector<FpWPoint> exceptional_points(const FpCurve& curve) {
  const Fp& a = curve.a();
  const Fp& d = curve.d();
  std::vector<FpWPoint> out;
  if (auto s = d.sqrt()) {
    Fp u = (from_int(a, 5) * d - a) / from_int(a, 12);
    Fp v = *s * (d - a) / from_int(a, 4);
    out.push_back(FpWPoint::affine(u, v));
    out.push_back(FpWPoint::affine(u, -v));
  }
  if (auto t = (a * d).sqrt()) {
    Fp six_t = from_int(a, 6) * *t;
    out.push_back(FpWPoint::affine((-(a + d) + six_t) / from_int(a, 12), from_int(a, 0)));
    out.push_back(FpWPoint::affine((-(a + d) - six_t) / from_int(a, 12), from_int(a, 0)));
  }
  return out;
}

FpCurve random_curve(const FieldPtr& field, std::mt19937_64& rng) {
  for (;;) {
    Fp a = random_element(field, rng);
    Fp d = random_element(field, rng);
    if (!a.is_zero() && !d.is_zero() && !(a == d)) return FpCurve(a, d);
  }
}

FpCurve random_complete_curve(const FieldPtr& field, std::mt19937_64& rng) {
  for (;;) {
    FpCurve c = random_curve(field, rng);
    if (has_complete_addition(c)) return c;
  }
}

std::optional<FpPoint> point_with_y(const FpCurve& curve, const Fp& y, bool negative_x) {
  Fp den = curve.a() - curve.d() * y * y;
  if (den.is_zero()) return std::nullopt;
  auto x = ((curve.one() - y * y) / den).sqrt();
  if (!x) return std::nullopt;
  Fp xv = negative_x ? -*x : *x;
  return curve.point(xv, y);
}

FpPoint random_point(const FpCurve& curve, std::mt19937_64& rng) {
  const FieldPtr& field = curve.a().field();
  for (;;) {
    Fp y = random_element(field, rng);
    if (auto p = point_with_y(curve, y, (rng() & 1U) != 0)) return *p;
  }
}

std::vector<FpPoint> enumerate_points(const FpCurve& curve) {
  const FieldPtr& field = curve.a().field();
  std::vector<FpPoint> out;
  const unsigned long p = field->modulus().get_ui();
  for (unsigned long yv = 0; yv < p; ++yv) {
    Fp y(field, Int(yv));
    auto pt = point_with_y(curve, y, false);
    if (!pt) continue;
    if (pt->x.is_zero()) {
      out.push_back(*pt);
      continue;
    }
    FpPoint neg = curve.negate(*pt);
    if (neg.x.value() < pt->x.value()) std::swap(neg, *pt);
    out.push_back(*pt);
    out.push_back(neg);
  }
  return out;
}

std::vector<FpWPoint> enumerate_points(const FpWCurve& curve) {
  const FieldPtr& field = curve.A().field();
  std::vector<FpWPoint> out{FpWPoint::infinity()};
  const unsigned long p = field->modulus().get_ui();
  for (unsigned long uv = 0; uv < p; ++uv) {
    Fp u(field, Int(uv));
    auto v = curve.rhs(u).sqrt();
    if (!v) continue;
    out.push_back(FpWPoint::affine(u, *v));
    if (!v->is_zero()) out.push_back(FpWPoint::affine(u, -*v));
  }
  return out;
}

}  // namespace edp
