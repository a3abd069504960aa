#include <doctest.h>

#include <random>

#include "edp/altrec.hpp"
#include "edp/curves/prime_curves.hpp"
#include "edp/edivpoly.hpp"

using namespace edp;

namespace {

MultiPoly T(const char* text) { return MultiPoly::parse(text, pq_variables()); }

Fp eval_t(const MultiPoly& f, const Fp& a, const Fp& d, const Fp& t) {
  return f.evaluate(std::vector<Fp>{a, d, t}, a);
}

}  // namespace

TEST_CASE("P and Q base cases") {
  CHECK(pq_pair(1).P == T("1"));
  CHECK(pq_pair(1).Q == T("1"));
  CHECK(pq_pair(2).P == T("2*(1 - d*t)"));
  CHECK(pq_pair(2).Q == T("1 - a*d*t^2"));
  CHECK(pq_pair(2).even());
  CHECK_THROWS_AS(pq_pair(0), InvalidArgument);
  CHECK_THROWS_AS(pq_pair(PQTable::kMaxIndex + 1), InvalidArgument);
}

TEST_CASE("P_3 and Q_3 by hand") {
  // n = 2 is even, so the step to 3 uses the (1 - at) branch.
  MultiPoly p1 = T("1"), q1 = T("1"), p2 = T("2*(1 - d*t)"), q2 = T("1 - a*d*t^2");
  MultiPoly common = T("1 - d*t") * q2 * q2 - T("a*d*t^2*(1 - a*t)") * p2 * p2;
  MultiPoly p3 = T("2*(1 - a*t)*(1 - d*t)") * p2 * q1 * q2 - p1 * common;
  MultiPoly q3 = q1 * common;
  CHECK(pq_pair(3).P == p3);
  CHECK(pq_pair(3).Q == q3);
  std::mt19937_64 rng(31);
  auto field = PrimeField::create(Int(10007));
  int checked = 0;
  while (checked < 500) {
    FpCurve c = random_complete_curve(field, rng);
    FpPoint p = random_point(c, rng);
    Fp t = p.x * p.x;
    FpPoint three = c.scalar_mul_naive(p, 3);
    CHECK(p.x * eval_t(p3, c.a(), c.d(), t) / eval_t(q3, c.a(), c.d(), t) == three.x);
    ++checked;
  }
}

TEST_CASE("symbolic and numeric P, Q agree and have integer coefficients") {
  std::mt19937_64 rng(32);
  auto field = PrimeField::create(Int(1000003));
  for (int i = 0; i < 10; ++i) {
    FpCurve c = random_curve(field, rng);
    Fp t = random_element(field, rng);
    auto values = pq_values(c.a(), c.d(), t, 7);
    for (unsigned n = 1; n <= 7; ++n) {
      CHECK(values[n].first == eval_t(pq_pair(n).P, c.a(), c.d(), t));
      CHECK(values[n].second == eval_t(pq_pair(n).Q, c.a(), c.d(), t));
    }
  }
  for (unsigned n = 1; n <= 7; ++n) CHECK(pq_pair(n).P.vars() == pq_variables());
}

TEST_CASE("x multiples and alpha agree with the addition law") {
  std::mt19937_64 rng(33);
  for (long p : {13L, 101L, 1009L, 10007L}) {
    auto field = PrimeField::create(Int(p));
    for (int k = 0; k < 3; ++k) {
      FpCurve c = random_complete_curve(field, rng);
      for (int i = 0; i < 20; ++i) {
        FpPoint q = random_point(c, rng);
        std::vector<Fp> xs = alt_x_multiples(c, q, 32);
        std::vector<FpPoint> ladder = x_only_ladder(c, q, 32);
        auto pq = pq_values(c.a(), c.d(), q.x * q.x, 32);
        FpPoint acc = c.identity();
        for (unsigned n = 1; n <= 32; ++n) {
          acc = c.add(acc, q);
          CHECK(xs[n] == acc.x);
          CHECK(alt_x_multiple(c, q, n) == acc.x);
          CHECK(ladder[n - 1] == acc);
          CHECK(altrec_mul(c, q, n) == acc);
          try {
            Fp alpha = alpha_eval(n, q.x * q.x, c.a(), c.d());
            CHECK(pq[n].second * alpha == pq[n].first);
          } catch (const ExceptionalDenominator& e) {
            CHECK(e.index() >= 2);
            CHECK(e.index() <= n);
          }
        }
      }
    }
  }
}

TEST_CASE("alpha special values") {
  auto field = PrimeField::create(Int(101));
  Fp a(field, 3), d(field, 5), t(field, 7);
  CHECK(alpha_eval(1, t, a, d) == Fp(field, 1));
  Fp one(field, 1);
  CHECK(alpha_eval(2, t, a, d) == Fp(field, 2) * (one - d * t) / (one - a * d * t * t));
  // 1 - a d t^2 = 0 at t^2 = 1/(ad).
  for (long v = 1; v < 101; ++v) {
    Fp tv(field, v);
    if (!(one - a * d * tv * tv).is_zero()) continue;
    try {
      alpha_eval(5, tv, a, d);
      FAIL("expected an exceptional denominator");
    } catch (const ExceptionalDenominator& e) {
      CHECK(e.index() == 2);
    }
  }
}

TEST_CASE("coordinate recovery") {
  std::mt19937_64 rng(34);
  auto field = PrimeField::create(Int(10007));
  for (int k = 0; k < 3; ++k) {
    FpCurve c = random_complete_curve(field, rng);
    for (int i = 0; i < 30; ++i) {
      FpPoint q = random_point(c, rng);
      if (q.x.is_zero()) continue;
      CHECK(recover_y(c, q.x, q.y, q.x, c.zero()) == q.y);
      FpPoint prev = c.identity();
      FpPoint cur = q;
      for (unsigned n = 1; n <= 32; ++n) {
        CHECK(recover_y(c, q.x, q.y, cur.x, prev.x) == cur.y);
        try {
          Fp x = recover_x(c, q.x, q.y, cur.y, prev.y);
          CHECK(x == cur.x);
        } catch (const ExceptionalDenominator&) {
        }
        prev = cur;
        cur = c.add(cur, q);
      }
    }
  }
  FpCurve c = make_curve(Int(1), Int(2), Int(13));
  CHECK_THROWS_AS(recover_y(c, c.zero(), c.one(), c.zero(), c.zero()), ExceptionalDenominator);
}

TEST_CASE("altrec special points") {
  FpCurve c = make_curve(Int(1), Int(2), Int(13));
  FpPoint minus = c.point(c.zero(), -c.one());
  CHECK(altrec_mul(c, minus, 3) == minus);
  CHECK(altrec_mul(c, minus, 4) == c.identity());
  CHECK(altrec_mul(c, c.identity(), 4) == c.identity());
  CHECK(alt_x_multiple(c, minus, 3).is_zero());
}

TEST_CASE("three multiplication methods agree") {
  std::mt19937_64 rng(35);
  auto field = PrimeField::create(Int(1009));
  for (int k = 0; k < 3; ++k) {
    FpCurve c = random_complete_curve(field, rng);
    FpWCurve w = c.weierstrass();
    for (int i = 0; i < 10; ++i) {
      FpPoint q = random_point(c, rng);
      for (unsigned n = 1; n <= 32; ++n) {
        FpPoint naive = c.scalar_mul_naive(q, n);
        CHECK(edwards_mul_divpoly(c, q, n) == naive);
        CHECK(altrec_mul(c, q, n) == naive);
      }
    }
  }
}
