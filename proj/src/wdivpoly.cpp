#include "edp/wdivpoly.hpp"

namespace edp {

const VarList& wpsi_variables() {
  static const VarList vars = Variables::of({"A", "B", "u"});
  return vars;
}

std::string WPsi::to_string() const {
  if (!has_v) return poly.to_string();
  if (poly.is_zero()) return "0";
  return "v*(" + poly.to_string() + ")";
}

WPsiTable& WPsiTable::instance() {
  static WPsiTable table;
  return table;
}

WPsiTable::WPsiTable() {
  const VarList& vars = wpsi_variables();
  F_ = MultiPoly::parse("u^3 + A*u + B", vars);
  sixteen_F2_ = F_ * F_ * Int(16);
  g_.push_back(MultiPoly(vars));
  g_.push_back(MultiPoly::constant(vars, Int(1)));
  g_.push_back(MultiPoly::constant(vars, Int(1)));
  g_.push_back(MultiPoly::parse("3*u^4 + 6*A*u^2 + 12*B*u - A^2", vars));
  g_.push_back(
      MultiPoly::parse("2*(u^6 + 5*A*u^4 + 20*B*u^3 - 5*A^2*u^2 - 4*A*B*u - A^3 - 8*B^2)", vars));
}

const MultiPoly& WPsiTable::g(unsigned n) {
  while (g_.size() <= n) {
    const unsigned k = static_cast<unsigned>(g_.size());
    const unsigned m = k / 2;
    MultiPoly next;
    if (k % 2 == 1) {
      MultiPoly lhs = g_[m + 2] * g_[m].pow(3);
      MultiPoly rhs = g_[m - 1] * g_[m + 1].pow(3);
      next = m % 2 == 0 ? sixteen_F2_ * lhs - rhs : lhs - sixteen_F2_ * rhs;
    } else {
      next = g_[m] * (g_[m + 2] * g_[m - 1].pow(2) - g_[m - 2] * g_[m + 1].pow(2));
    }
    g_.push_back(std::move(next));
  }
  return g_[n];
}

WPsi WPsiTable::get(unsigned n) {
  std::lock_guard<std::mutex> lock(mutex_);
  const MultiPoly& gn = g(n);
  if (n % 2 == 1) return WPsi{n, false, gn};
  // Psi_n = 2v * g(n).
  return WPsi{n, true, gn * Int(2)};
}

}  // namespace edp
