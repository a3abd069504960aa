#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

#include "edp/algebra/fp.hpp"
#include "edp/algebra/multipoly.hpp"
#include "edp/curves/prime_curves.hpp"

namespace edp {

// The variables (a, d, t) of P_n and Q_n.
const VarList& pq_variables();

// x_n = x*y*P(x^2)/Q(x^2) for even n, x*P(x^2)/Q(x^2) for odd n.
struct PQPair {
  unsigned n = 0;
  MultiPoly P;
  MultiPoly Q;

  bool even() const noexcept { return n % 2 == 0; }
};

// Memoized symbolic P_n, Q_n. The degrees grow by a factor of about 1 + sqrt(2)
// per step (P_8 alone has 77405 terms), so the table stops at kMaxIndex;
// numeric work uses pq_values.
class PQTable {
 public:
  static constexpr unsigned kMaxIndex = 7;

  PQTable();
  static PQTable& standard();

  const PQPair& get(unsigned n);
  void precompute(unsigned n_max) { get(n_max); }

 private:
  std::mutex mutex_;
  std::vector<std::unique_ptr<const PQPair>> table_;
  std::atomic<unsigned> size_{0};
};

// Throws InvalidArgument for n = 0 or n > PQTable::kMaxIndex.
inline const PQPair& pq_pair(unsigned n) { return PQTable::standard().get(n); }

// (P_k(t), Q_k(t)) for k = 0 .. n_max by the same recursion on values. Index 0
// holds (0, 1) and is never used by the recursion.
std::vector<std::pair<Fp, Fp>> pq_values(const Fp& a, const Fp& d, const Fp& t, unsigned n_max);

// x([n]P). Throws TorsionDenominator when Q_n(x^2) = 0.
Fp alt_x_multiple(const FpCurve& curve, const FpPoint& p, unsigned n);

// x([k]P) for k = 0 .. n_max from one run of the two-term recursion.
std::vector<Fp> alt_x_multiples(const FpCurve& curve, const FpPoint& p, unsigned n_max);

// alpha_n(t) by the rational recursion. Throws ExceptionalDenominator whose
// index() is the step at which a denominator vanished.
Fp alpha_eval(unsigned n, const Fp& t, const Fp& a, const Fp& d);

// y_n = (x_n y (1 - d x^2) - x_{n-1} (1 - a d x^2 x_n^2)) / (x (1 - d x_n^2)).
Fp recover_y(const FpCurve& curve, const Fp& x, const Fp& y, const Fp& x_n, const Fp& x_prev);

// x_n = (y_{n-1} (a - d(y^2 + y_n^2) + d y^2 y_n^2) - (a - d) y y_n)
//       / (x (a - d y^2)(a - d y_n^2)).
Fp recover_x(const FpCurve& curve, const Fp& x, const Fp& y, const Fp& y_n, const Fp& y_prev);

// [n]P from alt_x_multiples and recover_y.
FpPoint altrec_mul(const FpCurve& curve, const FpPoint& p, unsigned n);

// [1]P .. [n_max]P from the x-only sequence, recovering each y-coordinate.
std::vector<FpPoint> x_only_ladder(const FpCurve& curve, const FpPoint& p, unsigned n_max);

}  // namespace edp
