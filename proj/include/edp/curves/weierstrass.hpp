#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "edp/algebra/field.hpp"
#include "edp/errors.hpp"

namespace edp {

// Affine point of v^2 = u^3 + Au + B or the point at infinity.
template <FieldElement F>
class WeierstrassPoint {
 public:
  static WeierstrassPoint infinity() { return WeierstrassPoint(); }
  static WeierstrassPoint affine(F u, F v) { return WeierstrassPoint(std::move(u), std::move(v)); }

  bool is_infinity() const { return !u_.has_value(); }
  const F& u() const { return *u_; }
  const F& v() const { return *v_; }

  std::string to_string() const {
    return is_infinity() ? "O" : "(" + u_->to_string() + ", " + v_->to_string() + ")";
  }

  friend bool operator==(const WeierstrassPoint& p, const WeierstrassPoint& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
    return *p.u_ == *q.u_ && *p.v_ == *q.v_;
  }

 private:
  WeierstrassPoint() = default;
  WeierstrassPoint(F u, F v) : u_(std::move(u)), v_(std::move(v)) {}
  std::optional<F> u_;
  std::optional<F> v_;
};

// Short Weierstrass curve with the chord-tangent group law.
template <FieldElement F>
class WeierstrassCurve {
 public:
  using Point = WeierstrassPoint<F>;

  WeierstrassCurve(F A, F B) : A_(std::move(A)), B_(std::move(B)) {
    F disc = from_int(A_, 4) * A_ * A_ * A_ + from_int(A_, 27) * B_ * B_;
    if (disc.is_zero()) throw InvalidCurve("singular Weierstrass curve: 4A^3 + 27B^2 = 0");
  }

  const F& A() const { return A_; }
  const F& B() const { return B_; }

  // u^3 + Au + B.
  F rhs(const F& u) const { return u * u * u + A_ * u + B_; }

  bool contains(const F& u, const F& v) const { return v * v == rhs(u); }

  Point point(F u, F v) const {
    if (!contains(u, v)) throw NotOnCurve("point is not on the Weierstrass curve");
    return Point::affine(std::move(u), std::move(v));
  }

  Point negate(const Point& p) const {
    if (p.is_infinity()) return p;
    return Point::affine(p.u(), -p.v());
  }

  Point add(const Point& p, const Point& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    F lambda = p.u();
    if (p.u() == q.u()) {
      if (!(p.v() == q.v()) || p.v().is_zero()) return Point::infinity();
      lambda = (from_int(p.u(), 3) * p.u() * p.u() + A_) / (from_int(p.u(), 2) * p.v());
    } else {
      lambda = (q.v() - p.v()) / (q.u() - p.u());
    }
    F u = lambda * lambda - p.u() - q.u();
    F v = lambda * (p.u() - u) - p.v();
    return Point::affine(std::move(u), std::move(v));
  }

  Point scalar_mul_naive(const Point& p, std::uint64_t n) const {
    Point result = Point::infinity();
    Point addend = p;
    while (n != 0) {
      if ((n & 1U) != 0) result = add(result, addend);
      n >>= 1U;
      if (n != 0) addend = add(addend, addend);
    }
    return result;
  }

 private:
  F A_;
  F B_;
};

}  // namespace edp
