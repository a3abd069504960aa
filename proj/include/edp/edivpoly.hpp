#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "edp/algebra/fp.hpp"
#include "edp/algebra/multipoly.hpp"
#include "edp/curves/prime_curves.hpp"

namespace edp {

using Rational = mpq_class;

// m(n) = (n^2 - 1)/2 for odd n, (n^2 - 2)/2 for even n.
std::uint64_t m_of(unsigned n);
// k(n) = floor(3n^2 / 8).
std::uint64_t k_of(unsigned n);
// 1 iff n is even.
unsigned gamma_of(unsigned n);
// Leading and trailing sign factors, by n mod 8. Require n >= 1.
Rational delta_of(unsigned n);
Rational epsilon_of(unsigned n);

// The variables (a, d, y) of every reduced division polynomial.
const VarList& psi_tilde_variables();

// psi~_0 .. psi~_4. Replaceable so a deliberately wrong table can be checked.
struct PsiTildeBases {
  std::array<MultiPoly, 5> polys;

  static const PsiTildeBases& standard();
  // Standard bases with psi~_3 perturbed by +y.
  static PsiTildeBases corrupted();
};

// Memoized psi~_n in Z[a, d, y] for n <= kMaxIndex. Appends are guarded by a
// mutex; the slot array never reallocates, so entries below precomputed() can
// be read without locking.
class PsiTildeTable {
 public:
  static constexpr unsigned kMaxIndex = 1024;

  explicit PsiTildeTable(const PsiTildeBases& bases = PsiTildeBases::standard());

  static PsiTildeTable& standard();

  // Throws NotExactlyDivisible when a division by (y+1) leaves a remainder.
  const MultiPoly& get(unsigned n);
  void precompute(unsigned n_max);
  unsigned precomputed() const noexcept { return size_.load(std::memory_order_acquire); }
  const MultiPoly& at(unsigned n) const;

  const PsiTildeBases& bases() const noexcept { return bases_; }

 private:
  void extend_locked(unsigned n);

  PsiTildeBases bases_;
  std::mutex mutex_;
  std::vector<std::unique_ptr<const MultiPoly>> table_;
  std::atomic<unsigned> size_{0};
};

inline const MultiPoly& psi_tilde(unsigned n) { return PsiTildeTable::standard().get(n); }

// Exact quotient by (y+1)^times over Z[a,d][y]. Throws NotExactlyDivisible.
MultiPoly divide_by_y_plus_one(const MultiPoly& f, unsigned times = 1);

// psi_n = (a-d)^kpow * core / (x^xpow * (2(1-y))^mpow).
struct PsiForm {
  unsigned n = 0;
  std::uint64_t kpow = 0;
  std::uint64_t mpow = 0;
  unsigned xpow = 0;
  MultiPoly core;

  std::string to_string() const;
};

PsiForm psi_form(unsigned n);

// psi~_0 .. psi~_{n_max} evaluated at (a, d, y) over F_p by running the
// recursion on values. At y = -1 the values are truncated Taylor series in
// (y+1) deep enough that every division stays exact.
std::vector<Fp> psi_tilde_values(const Fp& a, const Fp& d, const Fp& y, unsigned n_max,
                                 const PsiTildeBases& bases = PsiTildeBases::standard());

// psi_0 .. psi_{n_max} at an affine point with x != 0 and y != 1.
std::vector<Fp> psi_values(const FpCurve& curve, const FpPoint& p, unsigned n_max,
                           const PsiTildeBases& bases = PsiTildeBases::standard());

struct PhiOmegaPsi {
  Fp phi;
  Fp omega;
  Fp psi;
};

// Throws UndefinedAtPoint at (0, 1) and (0, -1), TorsionDenominator when
// psi_n(P) = 0.
PhiOmegaPsi phi_omega_eval(const FpCurve& curve, const FpPoint& p, unsigned n,
                           const PsiTildeBases& bases = PsiTildeBases::standard());

// [n]P = (phi psi / omega, (phi - psi^2) / (phi + psi^2)). Throws
// ExceptionalDenominator when [n]P is not an affine point.
FpPoint edwards_mul_divpoly(const FpCurve& curve, const FpPoint& p, unsigned n,
                            const PsiTildeBases& bases = PsiTildeBases::standard());

struct TorsionVerdict {
  FpPoint point;
  unsigned n = 0;
  bool is_torsion = false;
  Fp witness;
};

// P is n-torsion iff psi~_n(y(P)) = 0; the identity is n-torsion by convention.
TorsionVerdict is_n_torsion(const FpCurve& curve, const FpPoint& p, unsigned n,
                            const PsiTildeBases& bases = PsiTildeBases::standard());
// Verdicts for n = 0 .. n_max from a single run of the recursion.
std::vector<TorsionVerdict> torsion_verdicts(const FpCurve& curve, const FpPoint& p, unsigned n_max,
                                             const PsiTildeBases& bases = PsiTildeBases::standard());

struct CheckReport {
  std::string theorem;
  unsigned n = 0;
  bool pass = false;
  std::string detail;
};

// Each checker reads psi~_n from `table`. A non-zero modulus reduces the
// coefficients mod p first; when 4p | n only the weaker degree bounds apply.
CheckReport check_integrality(unsigned n, PsiTildeTable& table = PsiTildeTable::standard());
CheckReport check_leading(unsigned n, const Int& modulus = 0,
                          PsiTildeTable& table = PsiTildeTable::standard());
CheckReport check_trailing(unsigned n, const Int& modulus = 0,
                           PsiTildeTable& table = PsiTildeTable::standard());
CheckReport check_degree(unsigned n, const Int& modulus = 0,
                         PsiTildeTable& table = PsiTildeTable::standard());
CheckReport check_symmetry(unsigned n, PsiTildeTable& table = PsiTildeTable::standard());
CheckReport check_homogeneity(unsigned n, PsiTildeTable& table = PsiTildeTable::standard());
CheckReport check_even_factor(unsigned n, PsiTildeTable& table = PsiTildeTable::standard());

// Reverses the y-coefficients of f padded to length m(n)+1, then substitutes
// a -> -d, d -> -a.
MultiPoly star_involution(const MultiPoly& f, unsigned n);

}  // namespace edp
