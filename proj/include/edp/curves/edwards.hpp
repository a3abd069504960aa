#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edp/algebra/field.hpp"
#include "edp/curves/weierstrass.hpp"
#include "edp/errors.hpp"

namespace edp {

template <FieldElement F>
struct EdwardsPoint {
  F x;
  F y;

  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
  friend bool operator==(const EdwardsPoint& p, const EdwardsPoint& q) {
    return p.x == q.x && p.y == q.y;
  }
};

// Twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 with a, d distinct and
// non-zero, together with its birationally equivalent Weierstrass model.
template <FieldElement F>
class EdwardsCurve {
 public:
  using Point = EdwardsPoint<F>;
  using WPoint = WeierstrassPoint<F>;

  EdwardsCurve(F a, F d) : a_(std::move(a)), d_(std::move(d)) {
    if (a_.is_zero() || d_.is_zero()) throw InvalidCurve("curve coefficients a and d must be non-zero");
    if (a_ == d_) throw InvalidCurve("curve coefficients a and d must be distinct");
  }

  const F& a() const { return a_; }
  const F& d() const { return d_; }
  F one() const { return from_int(a_, 1); }
  F zero() const { return from_int(a_, 0); }

  bool contains(const F& x, const F& y) const {
    F x2 = x * x;
    F y2 = y * y;
    return a_ * x2 + y2 == one() + d_ * x2 * y2;
  }

  Point point(F x, F y) const {
    if (!contains(x, y)) throw NotOnCurve("point is not on the Edwards curve");
    return Point{std::move(x), std::move(y)};
  }

  Point identity() const { return Point{zero(), one()}; }
  Point negate(const Point& p) const { return Point{-p.x, p.y}; }
  bool is_identity(const Point& p) const { return p.x.is_zero() && p.y == one(); }

  Point add(const Point& p, const Point& q) const {
    F t = d_ * p.x * q.x * p.y * q.y;
    F den_x = one() + t;
    F den_y = one() - t;
    if (den_x.is_zero() || den_y.is_zero()) {
      throw ExceptionalDenominator("Edwards addition denominator 1 +- d*x1*x2*y1*y2 vanishes");
    }
    return Point{(p.x * q.y + q.x * p.y) / den_x, (p.y * q.y - a_ * p.x * q.x) / den_y};
  }

  // x-coordinate of p + q written with squares of x only.
  F add_x(const Point& p, const Point& q) const {
    F x1s = p.x * p.x;
    F x2s = q.x * q.x;
    F den = one() - a_ * d_ * x1s * x2s;
    if (den.is_zero()) throw ExceptionalDenominator("denominator 1 - a*d*x1^2*x2^2 vanishes");
    return (p.x * q.y * (one() - d_ * x2s) + q.x * p.y * (one() - d_ * x1s)) / den;
  }

  // x(p + q) + x(p - q).
  F sum_of_x(const Point& p, const Point& q) const {
    F x2s = q.x * q.x;
    F den = one() - a_ * d_ * p.x * p.x * x2s;
    if (den.is_zero()) throw ExceptionalDenominator("denominator 1 - a*d*x1^2*x2^2 vanishes");
    return from_int(a_, 2) * p.x * q.y * (one() - d_ * x2s) / den;
  }

  // y(p + q) + y(p - q).
  F sum_of_y(const Point& p, const Point& q) const {
    F y1s = p.y * p.y;
    F y2s = q.y * q.y;
    F den = a_ - d_ * (y1s + y2s) + d_ * y1s * y2s;
    if (den.is_zero()) {
      throw ExceptionalDenominator("denominator a - d(y1^2 + y2^2) + d*y1^2*y2^2 vanishes");
    }
    return from_int(a_, 2) * (a_ - d_) * p.y * q.y / den;
  }

  Point scalar_mul_naive(const Point& p, std::uint64_t n) const {
    Point result = identity();
    Point addend = p;
    while (n != 0) {
      if ((n & 1U) != 0) result = add(result, addend);
      n >>= 1U;
      if (n != 0) addend = add(addend, addend);
    }
    return result;
  }

  // A = -(a^2 + 14ad + d^2)/48, B = -(a^3 - 33a^2 d - 33ad^2 + d^3)/864.
  WeierstrassCurve<F> weierstrass() const {
    const F& a = a_;
    const F& d = d_;
    F A = -(a * a + from_int(a, 14) * a * d + d * d) / from_int(a, 48);
    F B = -(a * a * a - from_int(a, 33) * a * a * d - from_int(a, 33) * a * d * d + d * d * d) /
          from_int(a, 864);
    return WeierstrassCurve<F>(std::move(A), std::move(B));
  }

  WPoint to_weierstrass(const Point& p) const {
    if (p.x.is_zero()) {
      if (p.y == one()) return WPoint::infinity();
      if (p.y == -one()) return WPoint::affine((a_ + d_) / from_int(a_, 6), zero());
      throw NotOnCurve("point with x = 0 must have y = 1 or y = -1");
    }
    F one_minus_y = one() - p.y;
    if (one_minus_y.is_zero()) throw NotOnCurve("point with y = 1 must have x = 0");
    F u = ((from_int(a_, 5) * a_ - d_) + (a_ - from_int(a_, 5) * d_) * p.y) /
          (from_int(a_, 12) * one_minus_y);
    F v = (a_ - d_) * (one() + p.y) / (from_int(a_, 4) * p.x * one_minus_y);
    return WPoint::affine(std::move(u), std::move(v));
  }

  Point from_weierstrass(const WPoint& q) const {
    if (q.is_infinity()) return identity();
    F six_u = from_int(a_, 6) * q.u();
    if (q.v().is_zero() && six_u == a_ + d_) return Point{zero(), -one()};
    F twelve_u = from_int(a_, 12) * q.u();
    F den_y = twelve_u + a_ - from_int(a_, 5) * d_;
    if (q.v().is_zero() || den_y.is_zero()) {
      throw ExceptionalPoint("Weierstrass point " + q.to_string() +
                             " has no image on the Edwards curve");
    }
    F x = (six_u - (a_ + d_)) / (from_int(a_, 6) * q.v());
    F y = (twelve_u + d_ - from_int(a_, 5) * a_) / den_y;
    return Point{std::move(x), std::move(y)};
  }

 private:
  F a_;
  F d_;
};

}  // namespace edp
