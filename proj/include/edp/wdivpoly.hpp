#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "edp/algebra/field.hpp"
#include "edp/algebra/multipoly.hpp"
#include "edp/curves/weierstrass.hpp"
#include "edp/errors.hpp"

namespace edp {

// Psi_n = v^(n even) * poly with poly in Z[A, B, u].
struct WPsi {
  unsigned n = 0;
  bool has_v = false;
  MultiPoly poly;

  std::string to_string() const;
};

// The variable list (A, B, u) used by every WPsi.
const VarList& wpsi_variables();

// Memoized symbolic table. Even-index entries are stored as Psi_n / (2v), so
// with F = u^3 + Au + B the recursion becomes division free:
//   g(2m+1) = 16F^2 g(m+2) g(m)^3 - g(m-1) g(m+1)^3            (m even)
//   g(2m+1) = g(m+2) g(m)^3 - 16F^2 g(m-1) g(m+1)^3            (m odd)
//   g(2m)   = g(m) (g(m+2) g(m-1)^2 - g(m-2) g(m+1)^2)
class WPsiTable {
 public:
  static WPsiTable& instance();

  WPsi get(unsigned n);

 private:
  WPsiTable();
  const MultiPoly& g(unsigned n);

  std::mutex mutex_;
  std::vector<MultiPoly> g_;
  MultiPoly F_;
  MultiPoly sixteen_F2_;
};

inline WPsi wpsi(unsigned n) { return WPsiTable::instance().get(n); }

// g(0..n_max) evaluated at a point of v^2 = u^3 + Au + B by the same recursion.
template <FieldElement F>
std::vector<F> wpsi_g_values(const F& A, const F& B, const F& u, unsigned n_max) {
  const F zero = from_int(u, 0);
  const F one = from_int(u, 1);
  const F f = u * u * u + A * u + B;
  const F sixteen_f2 = from_int(u, 16) * f * f;
  std::vector<F> g;
  g.reserve(n_max + 1);
  const F u2 = u * u;
  std::vector<F> base{zero, one, one,
                      from_int(u, 3) * u2 * u2 + from_int(u, 6) * A * u2 + from_int(u, 12) * B * u -
                          A * A,
                      from_int(u, 2) * (u2 * u2 * u2 + from_int(u, 5) * A * u2 * u2 +
                                        from_int(u, 20) * B * u2 * u - from_int(u, 5) * A * A * u2 -
                                        from_int(u, 4) * A * B * u - A * A * A -
                                        from_int(u, 8) * B * B)};
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n < base.size()) {
      g.push_back(base[n]);
      continue;
    }
    const unsigned m = n / 2;
    if (n % 2 == 1) {
      F lhs = g[m + 2] * g[m] * g[m] * g[m];
      F rhs = g[m - 1] * g[m + 1] * g[m + 1] * g[m + 1];
      if (m % 2 == 0) {
        g.push_back(sixteen_f2 * lhs - rhs);
      } else {
        g.push_back(lhs - sixteen_f2 * rhs);
      }
    } else {
      g.push_back(g[m] * (g[m + 2] * g[m - 1] * g[m - 1] - g[m - 2] * g[m + 1] * g[m + 1]));
    }
  }
  return g;
}

// Psi_0..Psi_{n_max} at an affine point.
template <FieldElement F>
std::vector<F> wpsi_values(const WeierstrassCurve<F>& curve, const WeierstrassPoint<F>& q,
                           unsigned n_max) {
  std::vector<F> g = wpsi_g_values(curve.A(), curve.B(), q.u(), n_max);
  const F two_v = from_int(q.v(), 2) * q.v();
  for (unsigned n = 0; n <= n_max; n += 2) g[n] = g[n] * two_v;
  return g;
}

// [n]Q through the division polynomials. Throws TorsionDenominator when
// Psi_n(Q) = 0, i.e. [n]Q is the point at infinity.
template <FieldElement F>
WeierstrassPoint<F> wmul(const WeierstrassCurve<F>& curve, const WeierstrassPoint<F>& q,
                         unsigned n) {
  if (q.is_infinity()) return q;
  if (n == 0) return WeierstrassPoint<F>::infinity();
  std::vector<F> g = wpsi_g_values(curve.A(), curve.B(), q.u(), 2 * n);
  const F four_f = from_int(q.u(), 4) * curve.rhs(q.u());
  F psi_n_sq = g[n] * g[n];
  F neighbours = g[n - 1] * g[n + 1];
  if (n % 2 == 0) {
    psi_n_sq = psi_n_sq * four_f;
  } else {
    neighbours = neighbours * four_f;
  }
  if (psi_n_sq.is_zero()) throw TorsionDenominator("Psi_n vanishes: the point is n-torsion");
  F u = q.u() - neighbours / psi_n_sq;
  F v = q.v() * g[2 * n] / (psi_n_sq * psi_n_sq);
  return WeierstrassPoint<F>::affine(std::move(u), std::move(v));
}

}  // namespace edp
