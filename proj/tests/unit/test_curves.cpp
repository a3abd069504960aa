#include <doctest.h>

#include <random>

#include "edp/curves/prime_curves.hpp"

using namespace edp;

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(make_curve(Int(2), Int(2), Int(13)), InvalidCurve);
  CHECK_THROWS_AS(make_curve(Int(0), Int(2), Int(13)), InvalidCurve);
  CHECK_THROWS_AS(make_curve(Int(15), Int(2), Int(13)), InvalidCurve);  // 15 = 2 mod 13
  CHECK_THROWS_AS(make_curve(Int(1), Int(2), Int(9)), InvalidModulus);
  FpCurve c = make_curve(Int(2), Int(3), Int(13));
  CHECK_THROWS_AS(c.point(Fp(c.a().field(), 1), Fp(c.a().field(), 1)), NotOnCurve);
}

TEST_CASE("identity, inverse and the point of order two") {
  std::mt19937_64 rng(1);
  FpCurve c = make_curve(Int(1), Int(2), Int(13));
  REQUIRE(has_complete_addition(c));
  FpPoint p = random_point(c, rng);
  CHECK(c.add(c.identity(), p) == p);
  CHECK(c.add(p, c.negate(p)) == c.identity());
  FpPoint t = c.point(c.zero(), -c.one());
  CHECK(c.scalar_mul_naive(t, 2) == c.identity());
  CHECK(c.scalar_mul_naive(p, 1) == p);
  CHECK(c.scalar_mul_naive(p, 0) == c.identity());
}

TEST_CASE("[5]P by double-and-add matches four additions on a=2, d=3, p=13") {
  FpCurve c = make_curve(Int(2), Int(3), Int(13));
  for (const FpPoint& p : enumerate_points(c)) {
    FpPoint acc = p;
    bool defined = true;
    try {
      for (int i = 0; i < 4; ++i) acc = c.add(acc, p);
    } catch (const ExceptionalDenominator&) {
      defined = false;
    }
    if (!defined) continue;
    try {
      FpPoint five = c.scalar_mul_naive(p, 5);
      CHECK(five == acc);
    } catch (const ExceptionalDenominator&) {
    }
  }
}

TEST_CASE("group law samples: associativity and the rephrased x formulas") {
  std::mt19937_64 rng(2);
  int associative = 0;
  int xadd = 0;
  for (long p : {13L, 101L, 1009L, 10007L, 1000003L}) {
    auto field = PrimeField::create(Int(p));
    for (int k = 0; k < 3; ++k) {
      FpCurve c = random_curve(field, rng);
      for (int i = 0; i < 40; ++i) {
        FpPoint P = random_point(c, rng);
        FpPoint Q = random_point(c, rng);
        FpPoint R = random_point(c, rng);
        try {
          FpPoint lhs = c.add(c.add(P, Q), R);
          FpPoint rhs = c.add(P, c.add(Q, R));
          CHECK(lhs == rhs);
          ++associative;
        } catch (const ExceptionalDenominator&) {
        }
        try {
          FpPoint s = c.add(P, Q);
          FpPoint m = c.add(P, c.negate(Q));
          CHECK(c.add_x(P, Q) == s.x);
          CHECK(c.sum_of_x(P, Q) == s.x + m.x);
          CHECK(c.sum_of_y(P, Q) == s.y + m.y);
          ++xadd;
        } catch (const ExceptionalDenominator&) {
        }
      }
    }
  }
  CHECK(associative > 500);
  CHECK(xadd > 500);
}

TEST_CASE("rephrased formulas: documented special values") {
  std::mt19937_64 rng(3);
  FpCurve c = make_curve(Int(5), Int(7), Int(1009));
  for (int i = 0; i < 50; ++i) {
    FpPoint P = random_point(c, rng);
    CHECK(c.add_x(P, c.identity()) == P.x);
    CHECK(c.sum_of_x(P, c.identity()) == from_int(P.x, 2) * P.x);
    Fp x2 = P.x * P.x;
    Fp expect = from_int(P.x, 2) * P.x * P.y * (c.one() - c.d() * x2) /
                (c.one() - c.a() * c.d() * x2 * x2);
    CHECK(c.add_x(P, P) == expect);
  }
}

TEST_CASE("complete curves never hit an exceptional denominator") {
  std::mt19937_64 rng(4);
  for (long p : {13L, 101L, 1009L}) {
    auto field = PrimeField::create(Int(p));
    for (int k = 0; k < 3; ++k) {
      FpCurve c = random_complete_curve(field, rng);
      CHECK(is_complete(c));
      for (int i = 0; i < 200; ++i) {
        FpPoint P = random_point(c, rng);
        FpPoint Q = random_point(c, rng);
        CHECK_NOTHROW(c.add(P, Q));
        CHECK_NOTHROW(c.add_x(P, Q));
      }
    }
  }
}

TEST_CASE("ad non-square alone does not make the full law complete") {
  // a = 2, d = 1 over F_13: 2 is a non-square, so ad is, yet some sums blow up.
  FpCurve c = make_curve(Int(2), Int(1), Int(13));
  CHECK(is_complete(c));
  CHECK_FALSE(has_complete_addition(c));
  int failures = 0;
  auto pts = enumerate_points(c);
  for (const auto& P : pts) {
    for (const auto& Q : pts) {
      try {
        c.add(P, Q);
      } catch (const ExceptionalDenominator&) {
        ++failures;
      }
      CHECK_NOTHROW(c.add_x(P, Q));
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("birational map: special points, round trip, homomorphism") {
  std::mt19937_64 rng(5);
  for (long p : {13L, 101L, 10007L}) {
    auto field = PrimeField::create(Int(p));
    for (int k = 0; k < 4; ++k) {
      FpCurve c = random_curve(field, rng);
      FpWCurve w = c.weierstrass();
      CHECK(c.to_weierstrass(c.identity()).is_infinity());
      FpWPoint two = c.to_weierstrass(c.point(c.zero(), -c.one()));
      CHECK(two == FpWPoint::affine((c.a() + c.d()) / from_int(c.a(), 6), c.zero()));
      CHECK(c.from_weierstrass(two) == c.point(c.zero(), -c.one()));
      CHECK(c.from_weierstrass(FpWPoint::infinity()) == c.identity());
      for (int i = 0; i < 60; ++i) {
        FpPoint P = random_point(c, rng);
        FpPoint Q = random_point(c, rng);
        FpWPoint wp = c.to_weierstrass(P);
        if (!wp.is_infinity()) CHECK(w.contains(wp.u(), wp.v()));
        CHECK(c.from_weierstrass(wp) == P);
        try {
          FpWPoint s = c.to_weierstrass(c.add(P, Q));
          CHECK(s == w.add(wp, c.to_weierstrass(Q)));
        } catch (const ExceptionalDenominator&) {
        }
      }
    }
  }
}

TEST_CASE("exceptional points on a=1, d=4, p=13") {
  FpCurve c = make_curve(Int(1), Int(4), Int(13));
  FpWCurve w = c.weierstrass();
  auto ex = exceptional_points(c);
  REQUIRE(ex.size() == 4);
  for (const auto& q : ex) {
    CHECK(w.contains(q.u(), q.v()));
    CHECK_THROWS_AS(c.from_weierstrass(q), ExceptionalPoint);
  }
  CHECK(w.scalar_mul_naive(ex[0], 2).is_infinity() == false);
  CHECK(w.scalar_mul_naive(ex[0], 4).is_infinity());
  CHECK(w.scalar_mul_naive(ex[1], 4).is_infinity());
  CHECK(w.scalar_mul_naive(ex[2], 2).is_infinity());
  CHECK(w.scalar_mul_naive(ex[3], 2).is_infinity());
  // s = 2: u = (5d - a)/12 = 19/12, v = 2(d - a)/4 = 3/2.
  Fp twelve = from_int(c.a(), 12);
  CHECK(ex[0].u() == from_int(c.a(), 19) / twelve);
}

TEST_CASE("exceptional points: order claims over many fields") {
  std::mt19937_64 rng(6);
  int seen4 = 0;
  int seen2 = 0;
  for (long p : {13L, 29L, 97L, 1009L}) {
    auto field = PrimeField::create(Int(p));
    for (int k = 0; k < 10; ++k) {
      FpCurve c = random_curve(field, rng);
      FpWCurve w = c.weierstrass();
      for (const auto& q : exceptional_points(c)) {
        CHECK(w.contains(q.u(), q.v()));
        if (q.v().is_zero()) {
          CHECK(w.add(q, q).is_infinity());
          ++seen2;
        } else {
          CHECK_FALSE(w.add(q, q).is_infinity());
          CHECK(w.scalar_mul_naive(q, 4).is_infinity());
          ++seen4;
        }
      }
    }
  }
  CHECK(seen2 > 0);
  CHECK(seen4 > 0);
}

TEST_CASE("affine Edwards points plus exceptional points account for the Weierstrass group") {
  for (long p : {13L, 29L, 97L}) {
    auto field = PrimeField::create(Int(p));
    for (long a = 1; a < 6; ++a) {
      for (long d = 1; d < 6; ++d) {
        if (a == d) continue;
        FpCurve c(Fp(field, a), Fp(field, d));
        CHECK(enumerate_points(c).size() + exceptional_points(c).size() ==
              enumerate_points(c.weierstrass()).size());
      }
    }
  }
}
